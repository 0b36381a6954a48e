# Copyright 2025 Vijil, Inc.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
#
# The vijil trademark is owned by Vijil Inc.

import logging
import os
import sys
from typing import Any, Dict, Optional

from fastapi import FastAPI, HTTPException, Request
from fastapi.responses import JSONResponse
from pydantic import BaseModel

# Add src directory to path for local module resolution
src_dir = os.path.abspath(
    os.path.join(os.path.dirname(__file__), '..', '..', 'src')
)
sys.path.insert(0, src_dir)

from walks import __version__, service  # noqa: E402
from walks.shared.errors import DomainError, WalksError  # noqa: E402

logger = logging.getLogger("walks.api")

app = FastAPI(title="Quadrant Walks API", version=__version__)


@app.exception_handler(WalksError)
async def walks_error_handler(request: Request, exc: WalksError):
    """Domain and check errors become 400 responses naming the field."""
    logger.info("Rejected %s: %s", request.url.path, exc)
    field = exc.field if isinstance(exc, DomainError) else None
    return JSONResponse(status_code=400,
                        content={'detail': str(exc), 'field': field})


class CriterionRequest(BaseModel):
    steps: str


class CountRequest(BaseModel):
    steps: str
    start: str = "0,0"
    n_max: int = 10
    region: str = "quadrant"
    aggregate: bool = False


class BijectionRequest(BaseModel):
    steps: str
    start: str = "0,0"
    walk: str
    legend: Optional[str] = None
    direction: str = "down"
    target_level: Optional[int] = None


class CardinalityRequest(BaseModel):
    steps: str
    start: str = "0,0"
    n_max: int = 8


class VerifyRequest(BaseModel):
    identity: str
    order: int
    branch: int = 0


class AnalyticRequest(BaseModel):
    x: Optional[str] = None
    sequence: str = "G"
    order: int = 300
    stride: Optional[int] = None
    samples: Optional[int] = None


class RecurRequest(BaseModel):
    spec: Optional[str] = None
    preset: Optional[str] = None
    steps: Optional[str] = None
    start: Optional[str] = None
    box: Optional[str] = None


class ReportResponse(BaseModel):
    ok: bool
    result: Dict[str, Any]


def _respond(report: service.Report) -> ReportResponse:
    return ReportResponse(ok=report.ok, result=report.payload)


@app.get("/health")
async def health_check():
    return {"status": "healthy", "version": __version__}


@app.post("/criterion", response_model=ReportResponse)
async def criterion(request: CriterionRequest):
    return _respond(service.criterion(request.steps))


@app.post("/count", response_model=ReportResponse)
async def count(request: CountRequest):
    return _respond(service.count(request.steps, request.start,
                                  request.n_max, request.region,
                                  request.aggregate))


@app.post("/bijection", response_model=ReportResponse)
async def bijection(request: BijectionRequest):
    return _respond(service.bijection(
        request.steps, request.start, request.walk, request.legend,
        request.direction, request.target_level,
    ))


@app.post("/bijection/cardinality", response_model=ReportResponse)
async def cardinality(request: CardinalityRequest):
    return _respond(service.cardinality(request.steps, request.start,
                                        request.n_max))


@app.get("/series/{name}", response_model=ReportResponse)
async def series(name: str, order: int = 30):
    if name not in service.SERIES_NAMES:
        raise HTTPException(status_code=404,
                            detail=f"Unknown series '{name}'")
    return _respond(service.series(name, order))


@app.post("/verify", response_model=ReportResponse)
async def verify(request: VerifyRequest):
    return _respond(service.verify(request.identity, request.order,
                                   request.branch))


@app.post("/analytic/{task}", response_model=ReportResponse)
async def analytic(task: str, request: AnalyticRequest):
    if task not in service.ANALYTIC_TASKS:
        raise HTTPException(status_code=404,
                            detail=f"Unknown analytic task '{task}'")
    return _respond(service.analytic_task(
        task, x=request.x, sequence=request.sequence, order=request.order,
        stride=request.stride, samples=request.samples,
    ))


@app.post("/recur", response_model=ReportResponse)
async def recur(request: RecurRequest):
    if request.spec is not None and not request.spec.lstrip().startswith('{'):
        raise HTTPException(status_code=400,
                            detail="The API accepts inline JSON specs only")
    return _respond(service.recur(box=request.box, spec=request.spec,
                                  preset=request.preset, steps=request.steps,
                                  start=request.start))
