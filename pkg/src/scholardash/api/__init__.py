"""REST API over the store, query, analytics, and topics layers."""
from scholardash.api.app import ApiError, create_app
from scholardash.api.filters import InvalidFilter, filter_from_json, filter_from_params
from scholardash.api.jobs import (
    JobNotDone,
    JobRecord,
    TopicJobService,
    TrainParams,
    UnknownJob,
    UnknownModel,
)

__all__ = [
    "ApiError",
    "InvalidFilter",
    "JobNotDone",
    "JobRecord",
    "TopicJobService",
    "TrainParams",
    "UnknownJob",
    "UnknownModel",
    "create_app",
    "filter_from_json",
    "filter_from_params",
]
