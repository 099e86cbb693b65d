// Filter drafting and URL serialization.
//
// Visualizations only ever reflect the applied filter; the draft is what
// the panel is editing. Applying copies draft -> applied and pushes the
// state into the location query string so the view is shareable.

import type { Dashboard } from "./api";

export interface FilterState {
  venues: string[];
  authors: string[];
  publishers: string[];
  paper_types: string[];
  fields_of_study: string[];
  access_types: string[];
  year_min: string;
  year_max: string;
  cit_min: string;
  cit_max: string;
}

export const LIST_FIELDS = [
  "venues",
  "authors",
  "publishers",
  "paper_types",
  "fields_of_study",
  "access_types",
] as const;

export const RANGE_FIELDS = ["year_min", "year_max", "cit_min", "cit_max"] as const;

// FilterState field -> API query parameter.
const WIRE_KEYS: Record<(typeof LIST_FIELDS)[number], string> = {
  venues: "venue",
  authors: "author",
  publishers: "publisher",
  paper_types: "paper_type",
  fields_of_study: "field_of_study",
  access_types: "access_type",
};

export function emptyFilter(): FilterState {
  return {
    venues: [],
    authors: [],
    publishers: [],
    paper_types: [],
    fields_of_study: [],
    access_types: [],
    year_min: "",
    year_max: "",
    cit_min: "",
    cit_max: "",
  };
}

export function cloneFilter(filter: FilterState): FilterState {
  return JSON.parse(JSON.stringify(filter)) as FilterState;
}

export function filterToParams(filter: FilterState): URLSearchParams {
  const params = new URLSearchParams();
  for (const field of LIST_FIELDS) {
    for (const value of filter[field]) params.append(WIRE_KEYS[field], value);
  }
  for (const field of RANGE_FIELDS) {
    const value = filter[field].trim();
    if (value !== "") params.set(field, value);
  }
  return params;
}

export interface RangeProblem {
  field: "year" | "citations";
  message: string;
}

export function validateRanges(filter: FilterState): RangeProblem | null {
  const pairs: Array<["year" | "citations", string, string]> = [
    ["year", filter.year_min, filter.year_max],
    ["citations", filter.cit_min, filter.cit_max],
  ];
  for (const [field, lo, hi] of pairs) {
    if (lo.trim() !== "" && !/^-?\d+$/.test(lo.trim())) {
      return { field, message: `${field} minimum must be an integer` };
    }
    if (hi.trim() !== "" && !/^-?\d+$/.test(hi.trim())) {
      return { field, message: `${field} maximum must be an integer` };
    }
    if (lo.trim() !== "" && hi.trim() !== "" && Number(lo) > Number(hi)) {
      return { field, message: `${field} minimum exceeds maximum` };
    }
  }
  return null;
}

const URL_KEY_PREFIX = "f.";

export function stateToSearch(dashboard: Dashboard, filter: FilterState): string {
  const params = new URLSearchParams();
  params.set("dashboard", dashboard);
  for (const field of LIST_FIELDS) {
    for (const value of filter[field]) params.append(URL_KEY_PREFIX + field, value);
  }
  for (const field of RANGE_FIELDS) {
    if (filter[field].trim() !== "") params.set(URL_KEY_PREFIX + field, filter[field].trim());
  }
  return params.toString();
}

export function stateFromSearch(search: string): { dashboard: Dashboard; filter: FilterState } {
  const params = new URLSearchParams(search);
  const filter = emptyFilter();
  for (const field of LIST_FIELDS) {
    filter[field] = params.getAll(URL_KEY_PREFIX + field);
  }
  for (const field of RANGE_FIELDS) {
    filter[field] = params.get(URL_KEY_PREFIX + field) ?? "";
  }
  const dashboard = (params.get("dashboard") ?? "papers") as Dashboard;
  return { dashboard, filter };
}
