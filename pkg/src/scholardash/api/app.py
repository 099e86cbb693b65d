"""HTTP surface: /api/v1 aggregate endpoints, topic jobs, CSV export.

Every read endpoint is stateless and pure over the corpus snapshot it
sees: identical filters produce identical bodies. Errors are JSON
objects carrying http_status, a machine code, and a human message.
"""
from __future__ import annotations

from pathlib import Path

from fastapi import FastAPI, Request, Response
from fastapi.responses import JSONResponse, PlainTextResponse

from scholardash import analytics, query, topics
from scholardash.api import filters as filter_wire
from scholardash.api.jobs import JobNotDone, TopicJobService, TrainParams, UnknownJob, UnknownModel
from scholardash.store import Corpus

API_PREFIX = "/api/v1"

DIMENSION_PATHS = {
    "papers": "papers",
    "authors": "authors",
    "venues": "venues",
    "paper-types": "paper_types",
    "fields-of-study": "fields_of_study",
    "publishers": "publishers",
}

DEFAULT_TOP_K = 10
DEFAULT_PAGE_SIZE = 50


class ApiError(Exception):
    def __init__(self, http_status: int, code: str, message: str):
        self.http_status = http_status
        self.code = code
        self.message = message
        super().__init__(message)


_ERROR_MAP: list[tuple[type[Exception], int, str]] = [
    (query.InvalidRegex, 400, "InvalidRegex"),
    (query.InvalidRange, 400, "InvalidFilter"),
    (query.UnknownFacet, 400, "UnknownFacet"),
    (filter_wire.InvalidFilter, 400, "InvalidFilter"),
    (analytics.UnknownDimension, 404, "UnknownDimension"),
    (analytics.EmptySelection, 422, "EmptySelection"),
    (analytics.InvalidMetric, 400, "InvalidMetric"),
    (analytics.BadPage, 400, "BadPage"),
    (analytics.BadSortKey, 400, "BadSortKey"),
    (topics.TooManyDocuments, 413, "TooManyDocuments"),
    (topics.TopicOutOfRange, 400, "TopicOutOfRange"),
    (topics.UnknownTerm, 404, "UnknownTerm"),
    (UnknownJob, 404, "UnknownJob"),
    (UnknownModel, 404, "UnknownModel"),
    (JobNotDone, 409, "JobNotDone"),
    (ValueError, 400, "InvalidParameter"),
]


def _as_api_error(exc: Exception) -> ApiError:
    for exc_type, status, code in _ERROR_MAP:
        if isinstance(exc, exc_type):
            return ApiError(status, code, str(exc))
    raise exc


# -- serializers ------------------------------------------------------


def _histogram_json(hist: analytics.YearHistogram) -> dict:
    return {
        "metric": hist.metric,
        "buckets": [{"year": year, "count": count} for year, count in hist.buckets],
    }


def _distribution_json(dist: analytics.DistributionSummary | None) -> dict | None:
    if dist is None:
        return None
    return {
        "min": dist.min,
        "q25": dist.q25,
        "median": dist.median,
        "q75": dist.q75,
        "max": dist.max,
    }


def _top_k_json(result: analytics.TopKList) -> dict:
    return {
        "metric": result.metric,
        "entries": [{"label": label, "weight": weight} for label, weight in result.entries],
    }


def _grid_json(page: analytics.DetailsPage) -> dict:
    return {
        "columns": list(page.columns),
        "rows": [dict(row) for row in page.rows],
        "total": page.total,
        "page": page.page,
        "page_size": page.page_size,
    }


def _series_json(series: analytics.CitationSeries) -> dict:
    return {
        "incoming": _histogram_json(series.incoming),
        "outgoing": _histogram_json(series.outgoing),
        "incoming_dist": _distribution_json(series.incoming_dist),
        "outgoing_dist": _distribution_json(series.outgoing_dist),
    }


def _panel_json(panel: topics.TermPanel) -> dict:
    return {
        "mode": panel.mode,
        "lambda": panel.lam,
        "terms": [
            {"term": row.term, "overall": row.overall, "in_topic": row.in_topic}
            for row in panel.rows
        ],
        "topic_weights": list(panel.topic_weights) if panel.topic_weights is not None else None,
    }


def _int_param(params, key: str, default: int) -> int:
    raw = params.get(key)
    if raw is None or raw == "":
        return default
    try:
        return int(raw)
    except ValueError:
        raise ApiError(400, "InvalidParameter", f"{key} must be an integer, got {raw!r}") from None


def _float_param(value, key: str, default: float) -> float:
    if value is None or value == "":
        return default
    try:
        return float(value)
    except (TypeError, ValueError):
        raise ApiError(400, "InvalidParameter", f"{key} must be a number, got {value!r}") from None


def create_app(
    corpus: Corpus,
    workers: int = 2,
    state_dir: str | Path | None = None,
    static_dir: str | Path | None = None,
) -> FastAPI:
    app = FastAPI(title="scholardash", docs_url=None, redoc_url=None, openapi_url=None)
    jobs = TopicJobService(corpus, workers=workers, state_dir=state_dir)
    app.state.corpus = corpus
    app.state.jobs = jobs

    @app.exception_handler(ApiError)
    async def _api_error_handler(_request, exc: ApiError):
        return JSONResponse(
            status_code=exc.http_status,
            content={"http_status": exc.http_status, "code": exc.code, "message": exc.message},
        )

    def _dimension(path_value: str) -> str:
        dim = DIMENSION_PATHS.get(path_value)
        if dim is None:
            raise ApiError(404, "UnknownDimension", f"unknown dimension {path_value!r}")
        return dim

    def _select(params) -> set[str]:
        return query.select(corpus, filter_wire.filter_from_params(params))

    # Aggregate computations shared by the JSON endpoints and CSV export.

    def _compute_per_year(dim: str, params) -> analytics.YearHistogram:
        return analytics.per_year(corpus, dim, _select(params))

    def _compute_distribution(dim: str, params) -> analytics.DistributionSummary:
        metric = params.get("metric") or analytics.METRIC_CITATIONS
        return analytics.distribution(corpus, dim, _select(params), metric)

    def _compute_top_k(dim: str, params) -> analytics.TopKList:
        metric = params.get("metric") or (
            analytics.METRIC_CITATIONS if dim == "papers" else analytics.METRIC_PAPERS
        )
        k = _int_param(params, "k", DEFAULT_TOP_K)
        return analytics.top_k(corpus, dim, _select(params), metric, k)

    def _compute_grid(dim: str, params) -> analytics.DetailsPage:
        return analytics.details_grid(
            corpus,
            dim,
            _select(params),
            page=_int_param(params, "page", 1),
            page_size=_int_param(params, "page_size", DEFAULT_PAGE_SIZE),
            sort_key=params.get("sort") or None,
            sort_dir=params.get("sort_dir") or "asc",
        )

    def _compute_series(params) -> analytics.CitationSeries:
        return analytics.citations_over_time(corpus, _select(params))

    def _guarded(fn, *args):
        try:
            with corpus.lock.read():
                return fn(*args)
        except ApiError:
            raise
        except Exception as exc:
            raise _as_api_error(exc) from exc

    @app.get("/healthz")
    async def healthz() -> PlainTextResponse:
        return PlainTextResponse("ok")

    @app.get(f"{API_PREFIX}/autocomplete")
    async def autocomplete(request: Request):
        params = request.query_params
        facet = params.get("facet") or ""
        text = params.get("q") or ""
        limit = _int_param(params, "limit", 10)
        regex = text.startswith(filter_wire.REGEX_PREFIX)
        if regex:
            text = text[len(filter_wire.REGEX_PREFIX):]
        suggestions = _guarded(query.autocomplete, corpus, facet, text, limit, regex)
        return {"suggestions": [{"value": s.value, "count": s.count} for s in suggestions]}

    @app.get(f"{API_PREFIX}/citations/series")
    async def citations_series(request: Request):
        return _series_json(_guarded(_compute_series, request.query_params))

    @app.get(f"{API_PREFIX}/export.csv")
    async def export_csv(request: Request):
        params = request.query_params
        target = (params.get("endpoint") or "").strip("/")
        result = None
        parts = target.split("/")
        if target == "citations/series":
            result = _guarded(_compute_series, params)
        elif len(parts) == 2 and parts[0] in DIMENSION_PATHS:
            dim = DIMENSION_PATHS[parts[0]]
            compute = {
                "per-year": _compute_per_year,
                "distribution": _compute_distribution,
                "top-k": _compute_top_k,
                "grid": _compute_grid,
            }.get(parts[1])
            if compute is not None:
                result = _guarded(compute, dim, params)
        if result is None:
            raise ApiError(400, "InvalidExportTarget", f"cannot export endpoint {target!r}")
        filename = target.replace("/", "-") + ".csv"
        return Response(
            content=analytics.export_csv(result),
            media_type="text/csv; charset=utf-8",
            headers={"Content-Disposition": f'attachment; filename="{filename}"'},
        )

    @app.post(f"{API_PREFIX}/topics/jobs", status_code=202)
    async def submit_job(request: Request):
        try:
            body = await request.json()
        except Exception:
            raise ApiError(400, "InvalidBody", "request body must be a JSON object") from None
        if not isinstance(body, dict):
            raise ApiError(400, "InvalidBody", "request body must be a JSON object")
        filters_echo = body.get("filters") or {}
        params = TrainParams(
            k=_int_param(body, "k", topics.DEFAULT_TOPICS),
            alpha=(None if body.get("alpha") is None else _float_param(body.get("alpha"), "alpha", 0.0)),
            beta=_float_param(body.get("beta"), "beta", topics.DEFAULT_BETA),
            iterations=_int_param(body, "iterations", topics.DEFAULT_ITERATIONS),
            seed=_int_param(body, "seed", 0),
            lam=_float_param(body.get("lambda"), "lambda", topics.DEFAULT_LAMBDA),
        )
        try:
            filter_query = filter_wire.filter_from_json(filters_echo)
            job = jobs.submit(filter_query, params, filters_echo=filters_echo)
        except ApiError:
            raise
        except Exception as exc:
            raise _as_api_error(exc) from exc
        return job.to_json()

    @app.get(f"{API_PREFIX}/topics/jobs/{{job_id}}")
    async def get_job(job_id: str):
        try:
            return jobs.get_job(job_id).to_json()
        except Exception as exc:
            raise _as_api_error(exc) from exc

    @app.get(f"{API_PREFIX}/topics/models/{{model_id}}/map")
    async def topic_map(model_id: str):
        try:
            model = jobs.get_model(model_id)
        except Exception as exc:
            raise _as_api_error(exc) from exc
        return {
            "topics": [
                {
                    "topic": k,
                    "x": float(model.coords[k, 0]),
                    "y": float(model.coords[k, 1]),
                    "marginal": float(model.marginal[k]),
                }
                for k in range(model.k)
            ]
        }

    @app.get(f"{API_PREFIX}/topics/models/{{model_id}}/terms")
    async def topic_terms(model_id: str, request: Request):
        params = request.query_params
        try:
            model = jobs.get_model(model_id)
            topic_raw = params.get("topic")
            selected_topic = None if topic_raw in (None, "") else int(topic_raw)
            selected_term = params.get("term") or None
            lam = _float_param(params.get("lambda"), "lambda", jobs.model_lambda(model_id))
            panel = topics.term_panel(
                model,
                selected_topic=selected_topic,
                selected_term=selected_term,
                lam=lam,
            )
        except ApiError:
            raise
        except Exception as exc:
            raise _as_api_error(exc) from exc
        return _panel_json(panel)

    @app.get(f"{API_PREFIX}/{{dimension}}/per-year")
    async def per_year(dimension: str, request: Request):
        return _histogram_json(_guarded(_compute_per_year, _dimension(dimension), request.query_params))

    @app.get(f"{API_PREFIX}/{{dimension}}/distribution")
    async def distribution(dimension: str, request: Request):
        return _distribution_json(_guarded(_compute_distribution, _dimension(dimension), request.query_params))

    @app.get(f"{API_PREFIX}/{{dimension}}/top-k")
    async def top_k(dimension: str, request: Request):
        return _top_k_json(_guarded(_compute_top_k, _dimension(dimension), request.query_params))

    @app.get(f"{API_PREFIX}/{{dimension}}/grid")
    async def grid(dimension: str, request: Request):
        return _grid_json(_guarded(_compute_grid, _dimension(dimension), request.query_params))

    if static_dir is not None:
        from fastapi.staticfiles import StaticFiles

        app.mount("/", StaticFiles(directory=str(static_dir), html=True), name="ui")

    return app
