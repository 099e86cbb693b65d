"""Filter wire grammar.

Query string form: repeated keys build a facet's OR list
(venue=ACL&venue=EMNLP), facets present together AND, ranges use
year_min/year_max/cit_min/cit_max, and a "re:" prefix switches a
venue/author/publisher value into regex mode. The JSON body form uses
the FilterQuery field names with the same value conventions.
"""
from __future__ import annotations

from typing import Mapping

from scholardash.query import FilterQuery, TextMatcher

REGEX_PREFIX = "re:"

# wire key -> FilterQuery matcher field
_MATCHER_KEYS = {"venue": "venues", "author": "authors", "publisher": "publishers"}
# wire key -> FilterQuery plain-value field
_VALUE_KEYS = {
    "paper_type": "paper_types",
    "field_of_study": "fields_of_study",
    "access_type": "access_types",
}

FILTER_PARAM_KEYS = tuple(_MATCHER_KEYS) + tuple(_VALUE_KEYS) + (
    "year_min", "year_max", "cit_min", "cit_max",
)


class InvalidFilter(Exception):
    pass


def matcher_from_text(value: str) -> TextMatcher:
    if value.startswith(REGEX_PREFIX):
        return TextMatcher(pattern=value[len(REGEX_PREFIX):], mode="regex")
    return TextMatcher(pattern=value)


def _int_or_none(raw: str | int | None, key: str) -> int | None:
    if raw is None or raw == "":
        return None
    if isinstance(raw, bool) or (not isinstance(raw, int) and not isinstance(raw, str)):
        raise InvalidFilter(f"{key} must be an integer")
    try:
        return int(raw)
    except ValueError:
        raise InvalidFilter(f"{key} must be an integer, got {raw!r}") from None


def _range(lo: int | None, hi: int | None, lo_default: int, hi_default: int) -> tuple[int, int] | None:
    if lo is None and hi is None:
        return None
    return (lo if lo is not None else lo_default, hi if hi is not None else hi_default)


def _build(
    matcher_lists: dict[str, list[str]],
    value_lists: dict[str, list[str]],
    year_min: int | None,
    year_max: int | None,
    cit_min: int | None,
    cit_max: int | None,
) -> FilterQuery:
    kwargs: dict = {}
    for key, field in _MATCHER_KEYS.items():
        kwargs[field] = tuple(matcher_from_text(v) for v in matcher_lists.get(key, []))
    for key, field in _VALUE_KEYS.items():
        kwargs[field] = tuple(value_lists.get(key, []))
    kwargs["year_range"] = _range(year_min, year_max, 1000, 3000)
    kwargs["citation_range"] = _range(cit_min, cit_max, 0, 2**62)
    return FilterQuery(**kwargs)


def filter_from_params(params) -> FilterQuery:
    """Decode a query-string mapping with getlist() (starlette QueryParams)."""
    return _build(
        {key: params.getlist(key) for key in _MATCHER_KEYS},
        {key: params.getlist(key) for key in _VALUE_KEYS},
        _int_or_none(params.get("year_min"), "year_min"),
        _int_or_none(params.get("year_max"), "year_max"),
        _int_or_none(params.get("cit_min"), "cit_min"),
        _int_or_none(params.get("cit_max"), "cit_max"),
    )


def filter_from_json(data: Mapping) -> FilterQuery:
    """Decode the JSON body form (plural field names, same conventions)."""
    if not isinstance(data, Mapping):
        raise InvalidFilter("filters must be an object")

    def str_list(field: str) -> list[str]:
        value = data.get(field, [])
        if not isinstance(value, list) or any(not isinstance(v, str) for v in value):
            raise InvalidFilter(f"{field} must be a list of strings")
        return value

    unknown = set(data) - {
        "venues", "authors", "publishers", "paper_types", "fields_of_study",
        "access_types", "year_min", "year_max", "cit_min", "cit_max",
    }
    if unknown:
        raise InvalidFilter(f"unknown filter fields: {sorted(unknown)}")

    return _build(
        {key: str_list(field) for key, field in _MATCHER_KEYS.items()},
        {key: str_list(field) for key, field in _VALUE_KEYS.items()},
        _int_or_none(data.get("year_min"), "year_min"),
        _int_or_none(data.get("year_max"), "year_max"),
        _int_or_none(data.get("cit_min"), "cit_min"),
        _int_or_none(data.get("cit_max"), "cit_max"),
    )
