"""HTTP front end over the verification suites.

The service is a thin wrapper: a POST body is a `SuiteRequest`, the response
is the `SuiteResult` the in-process runner produced.  The CLI drives the
same runner with the same request model, so a command line and a POST are
interchangeable ways to run a suite.

Run with:  uvicorn fockbench.service:app
"""
from __future__ import annotations

from fastapi import FastAPI, HTTPException

from . import __version__
from .suites import SUITE_NAMES, SuiteRequest, SuiteResult, UnknownSuiteError, run_request

app = FastAPI(
    title="fockbench",
    version=__version__,
    description="Verification suites for coherent and su(1,1) generalized "
    "coherent operators on truncated Fock spaces.",
)


@app.get("/health")
def health() -> dict:
    return {"status": "ok", "version": __version__}


@app.get("/suites")
def list_suites() -> dict:
    return {"suites": [*SUITE_NAMES, "all"]}


@app.post("/suites/run", response_model=SuiteResult)
def run(request: SuiteRequest) -> SuiteResult:
    try:
        return run_request(request)
    except UnknownSuiteError as exc:
        raise HTTPException(status_code=404, detail=str(exc)) from None
