// Typed client for the /api/v1 surface. All numbers shown in the UI come
// from these payloads; the client never aggregates.

export interface YearBucket {
  year: number;
  count: number;
}

export interface YearHistogram {
  metric: string;
  buckets: YearBucket[];
}

export interface DistributionSummary {
  min: number;
  q25: number;
  median: number;
  q75: number;
  max: number;
}

export interface TopKEntry {
  label: string;
  weight: number;
}

export interface TopKList {
  metric: string;
  entries: TopKEntry[];
}

export interface DetailsPage {
  columns: string[];
  rows: Record<string, unknown>[];
  total: number;
  page: number;
  page_size: number;
}

export interface CitationSeries {
  incoming: YearHistogram;
  outgoing: YearHistogram;
  incoming_dist: DistributionSummary | null;
  outgoing_dist: DistributionSummary | null;
}

export interface Suggestion {
  value: string;
  count: number;
}

export interface JobRecord {
  job_id: string;
  state: "queued" | "running" | "done" | "failed";
  submitted_at: string;
  finished_at: string | null;
  params: Record<string, unknown>;
  result_ref: string | null;
  error: string | null;
}

export interface TopicCircle {
  topic: number;
  x: number;
  y: number;
  marginal: number;
}

export interface TermRow {
  term: string;
  overall: number;
  in_topic: number | null;
}

export interface TermPanel {
  mode: "salient_overall" | "relevant_in_topic";
  lambda: number;
  terms: TermRow[];
  topic_weights: number[] | null;
}

export interface ApiErrorBody {
  http_status: number;
  code: string;
  message: string;
}

export class ApiError extends Error {
  constructor(public body: ApiErrorBody) {
    super(body.message);
  }
}

export type Dashboard =
  | "papers"
  | "authors"
  | "venues"
  | "paper_types"
  | "fields_of_study"
  | "publishers"
  | "citations"
  | "lda_topics";

export const DIMENSION_PATHS: Record<string, string> = {
  papers: "papers",
  authors: "authors",
  venues: "venues",
  paper_types: "paper-types",
  fields_of_study: "fields-of-study",
  publishers: "publishers",
};

export type Metric = "citations" | "papers";

export class ApiClient {
  constructor(public baseUrl = "") {}

  private async request<T>(path: string, params?: URLSearchParams, init?: RequestInit): Promise<T> {
    const query = params && [...params.keys()].length ? `?${params.toString()}` : "";
    const response = await fetch(`${this.baseUrl}${path}${query}`, init);
    if (!response.ok) {
      let body: ApiErrorBody;
      try {
        body = (await response.json()) as ApiErrorBody;
      } catch {
        body = { http_status: response.status, code: "Unknown", message: response.statusText };
      }
      throw new ApiError(body);
    }
    return (await response.json()) as T;
  }

  perYear(dim: string, filter: URLSearchParams): Promise<YearHistogram> {
    return this.request(`/api/v1/${DIMENSION_PATHS[dim]}/per-year`, filter);
  }

  distribution(dim: string, filter: URLSearchParams, metric: Metric): Promise<DistributionSummary> {
    const params = new URLSearchParams(filter);
    params.set("metric", metric);
    return this.request(`/api/v1/${DIMENSION_PATHS[dim]}/distribution`, params);
  }

  topK(dim: string, filter: URLSearchParams, k: number, metric: Metric): Promise<TopKList> {
    const params = new URLSearchParams(filter);
    params.set("k", String(k));
    params.set("metric", metric);
    return this.request(`/api/v1/${DIMENSION_PATHS[dim]}/top-k`, params);
  }

  grid(
    dim: string,
    filter: URLSearchParams,
    page: number,
    pageSize: number,
    sort?: string,
    sortDir?: "asc" | "desc",
  ): Promise<DetailsPage> {
    const params = new URLSearchParams(filter);
    params.set("page", String(page));
    params.set("page_size", String(pageSize));
    if (sort) {
      params.set("sort", sort);
      params.set("sort_dir", sortDir ?? "asc");
    }
    return this.request(`/api/v1/${DIMENSION_PATHS.papers === dim ? "papers" : DIMENSION_PATHS[dim]}/grid`, params);
  }

  citationSeries(filter: URLSearchParams): Promise<CitationSeries> {
    return this.request("/api/v1/citations/series", filter);
  }

  async autocomplete(facet: string, q: string, limit = 8): Promise<Suggestion[]> {
    const params = new URLSearchParams({ facet, q, limit: String(limit) });
    const body = await this.request<{ suggestions: Suggestion[] }>("/api/v1/autocomplete", params);
    return body.suggestions;
  }

  submitJob(body: Record<string, unknown>): Promise<JobRecord> {
    return this.request("/api/v1/topics/jobs", undefined, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(body),
    });
  }

  getJob(jobId: string): Promise<JobRecord> {
    return this.request(`/api/v1/topics/jobs/${jobId}`);
  }

  topicMap(modelId: string): Promise<{ topics: TopicCircle[] }> {
    return this.request(`/api/v1/topics/models/${modelId}/map`);
  }

  topicTerms(
    modelId: string,
    opts: { topic?: number; term?: string; lambda?: number } = {},
  ): Promise<TermPanel> {
    const params = new URLSearchParams();
    if (opts.topic !== undefined) params.set("topic", String(opts.topic));
    if (opts.term !== undefined) params.set("term", opts.term);
    if (opts.lambda !== undefined) params.set("lambda", String(opts.lambda));
    return this.request(`/api/v1/topics/models/${modelId}/terms`, params);
  }

  exportCsvUrl(endpoint: string, filter: URLSearchParams, extra?: Record<string, string>): string {
    const params = new URLSearchParams(filter);
    params.set("endpoint", endpoint);
    for (const [key, value] of Object.entries(extra ?? {})) params.set(key, value);
    return `${this.baseUrl}/api/v1/export.csv?${params.toString()}`;
  }

  async exportCsv(endpoint: string, filter: URLSearchParams, extra?: Record<string, string>): Promise<Blob> {
    const response = await fetch(this.exportCsvUrl(endpoint, filter, extra));
    if (!response.ok) throw new Error(`export failed: ${response.status}`);
    return response.blob();
  }
}

// Stale responses are discarded by tagging each fetch with a sequence
// number; only the newest one may apply its result.
export class LatestOnly {
  private seq = 0;

  wrap<T>(promise: Promise<T>, apply: (value: T) => void, onError?: (err: unknown) => void): Promise<void> {
    const ticket = ++this.seq;
    return promise
      .then((value) => {
        if (ticket === this.seq) apply(value);
      })
      .catch((err) => {
        if (ticket === this.seq && onError) onError(err);
      });
  }
}
