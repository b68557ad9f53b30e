"""HTTP face of the package.

A long-running process pays the recursion's memoization cost once and
serves every caller from the shared cache, so the service wraps the core
package and the CLI acts as a client.  Domain validation failures come
back as 400 with the reason in `detail`.
"""

from __future__ import annotations

from fastapi import FastAPI, HTTPException

from . import __version__
from .compgroup import ComponentElement
from .partitions import Partition, Series, validate
from .schemas import (
    EvalRequest,
    EvalResponse,
    ExpandRequest,
    ExpandResponse,
    ExpandTerm,
    TableRequest,
    TableResponse,
    TableRow,
    VerifyRequest,
    VerifyResponse,
    VerifyRow,
)
from .traces import expand_restriction, full_table, graded_trace
from .flagcount import verify_range


def _partition(parts):
    try:
        return Partition(parts)
    except ValueError as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from None


def _element(support):
    return ComponentElement(support)


def _poly_fields(poly):
    return poly.to_coeff_strings(), [int(c) for c in poly.coefficients_ascending()]


def create_app():
    app = FastAPI(
        title="springer",
        version=__version__,
        description="Graded traces and Betti numbers of Springer fibers for "
        "classical groups, with finite-field verification.",
    )

    @app.get("/health")
    def health():
        return {"status": "ok", "version": __version__}

    @app.post("/eval", response_model=EvalResponse)
    def eval_trace(req: EvalRequest):
        series = Series(req.series)
        lam = _partition(req.partition)
        z = _element(req.z)
        try:
            poly = graded_trace(lam, z, series)
        except ValueError as exc:
            raise HTTPException(status_code=400, detail=str(exc)) from None
        coeffs, ints = _poly_fields(poly)
        return EvalResponse(
            series=series.value,
            partition=list(lam.parts),
            z=sorted(z.support),
            poly=coeffs,
            betti=ints,
        )

    @app.post("/table", response_model=TableResponse)
    def table(req: TableRequest):
        series = Series(req.series)
        rows = []
        for lam, z, poly in full_table(series, req.n):
            coeffs, ints = _poly_fields(poly)
            rows.append(
                TableRow(
                    series=series.value,
                    partition=list(lam.parts),
                    z=sorted(z.support),
                    poly=coeffs,
                    betti=ints,
                    very_even=validate(lam, series).very_even,
                )
            )
        return TableResponse(series=series.value, n=req.n, rows=rows)

    @app.post("/expand", response_model=ExpandResponse)
    def expand(req: ExpandRequest):
        series = Series(req.series)
        lam = _partition(req.partition)
        z = _element(req.z)
        try:
            expansion = expand_restriction(lam, z, series)
        except ValueError as exc:
            raise HTTPException(status_code=400, detail=str(exc)) from None
        terms = []
        for t in expansion.terms:
            if t.is_null and not req.show_null:
                continue
            terms.append(
                ExpandTerm(
                    coeff=t.coeff.to_coeff_strings(),
                    child=None if t.is_null else list(t.child.parts),
                    child_z=sorted(t.child_z.support),
                    null=t.is_null,
                )
            )
        return ExpandResponse(
            series=series.value,
            partition=list(lam.parts),
            z=sorted(z.support),
            terms=terms,
        )

    @app.post("/verify", response_model=VerifyResponse)
    def verify(req: VerifyRequest):
        series = Series(req.series)
        try:
            reports = verify_range(
                series,
                req.max_size,
                req.q,
                twisted=req.twisted,
                twisted_max_size=req.twisted_max_size,
            )
        except ValueError as exc:
            raise HTTPException(status_code=400, detail=str(exc)) from None
        rows = [
            VerifyRow(
                series=r.series.value,
                partition=list(r.partition.parts),
                z=sorted(r.z.support),
                q=r.q,
                count=r.count,
                predicted=r.predicted,
                match=r.match,
            )
            for r in reports
        ]
        return VerifyResponse(rows=rows, all_match=all(r.match for r in rows))

    return app


app = create_app()
