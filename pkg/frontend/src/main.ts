// App assembly: dashboard selector (board A), filter panel (board B),
// and the four visualization slots (board C), with the citations and
// topics boards swapping in their special views. The applied filter and
// active dashboard serialize into the URL so any view is shareable.

import { ApiClient, LatestOnly, type Dashboard, type Metric } from "./api";
import { createBarChart } from "./components/barChart";
import { createBoxplot } from "./components/boxplot";
import { createExportControls } from "./components/exportControls";
import { createFilterPanel } from "./components/filterPanel";
import { createGrid, type GridQuery } from "./components/grid";
import { createLdaExplorer } from "./components/ldaExplorer";
import { createTreemap } from "./components/treemap";
import {
  cloneFilter,
  emptyFilter,
  filterToParams,
  stateFromSearch,
  stateToSearch,
  type FilterState,
} from "./state";

const DASHBOARDS: Array<{ id: Dashboard; label: string }> = [
  { id: "papers", label: "Papers" },
  { id: "authors", label: "Authors" },
  { id: "venues", label: "Venues" },
  { id: "paper_types", label: "Types of Papers" },
  { id: "fields_of_study", label: "Fields of Study" },
  { id: "publishers", label: "Publishers" },
  { id: "citations", label: "Citations" },
  { id: "lda_topics", label: "LDA Topics" },
];

export interface App {
  root: HTMLElement;
  refresh(): Promise<void>;
}

export function createApp(root: HTMLElement, api: ApiClient): App {
  let activeDashboard: Dashboard = "papers";
  let appliedFilter: FilterState = emptyFilter();
  let metric: Metric = "citations";
  let topK = 10;
  let gridQuery: GridQuery = { page: 1, sort: undefined, sortDir: "asc" };
  const inflight = new LatestOnly();

  root.innerHTML = "";
  root.className = "app";

  // Board A: dashboard selector.
  const nav = document.createElement("nav");
  nav.className = "dashboards";
  const navButtons = new Map<Dashboard, HTMLButtonElement>();
  for (const { id, label } of DASHBOARDS) {
    const button = document.createElement("button");
    button.textContent = label;
    button.dataset.dashboard = id;
    button.addEventListener("click", () => {
      activeDashboard = id;
      gridQuery = { page: 1, sort: undefined, sortDir: "asc" };
      pushUrl();
      void refresh();
    });
    navButtons.set(id, button);
    nav.appendChild(button);
  }
  root.appendChild(nav);

  const layout = document.createElement("div");
  layout.className = "layout";
  root.appendChild(layout);

  // Board B: filters.
  const panel = createFilterPanel(api);
  layout.appendChild(panel.el);

  // Board C: visualization slots.
  const main = document.createElement("main");
  main.className = "visualizations";
  layout.appendChild(main);

  const metricToggle = document.createElement("select");
  metricToggle.className = "metric-toggle";
  for (const value of ["citations", "papers"]) {
    const option = document.createElement("option");
    option.value = value;
    option.textContent = `metric: ${value}`;
    metricToggle.appendChild(option);
  }
  metricToggle.addEventListener("change", () => {
    metric = metricToggle.value as Metric;
    void refresh();
  });

  const perYearChart = createBarChart("per year");
  const grid = createGrid("Details Grid");
  const boxplot = createBoxplot("Distribution");
  const treemap = createTreemap("Top k", topK);
  treemap.onKChange((k) => {
    topK = k;
    void refresh();
  });
  grid.onQueryChange((query) => {
    gridQuery = query;
    void refresh();
  });

  const exports = createExportControls(
    api,
    () => `${pathFor(activeDashboard)}/per-year`,
    () => filterToParams(appliedFilter),
    () => ({}),
    () => perYearChart.svg,
  );

  const incomingChart = createBarChart("Incoming citations per year");
  const outgoingChart = createBarChart("Outgoing citations per year");
  const incomingBox = createBoxplot("Incoming distribution");
  const outgoingBox = createBoxplot("Outgoing distribution");

  const lda = createLdaExplorer(api);
  lda.setFilterProvider(() => filterToParams(appliedFilter));

  function pathFor(dashboard: Dashboard): string {
    return {
      papers: "papers",
      authors: "authors",
      venues: "venues",
      paper_types: "paper-types",
      fields_of_study: "fields-of-study",
      publishers: "publishers",
      citations: "papers",
      lda_topics: "papers",
    }[dashboard];
  }

  function pushUrl(): void {
    const search = stateToSearch(activeDashboard, appliedFilter);
    history.pushState(null, "", `${location.pathname}?${search}`);
  }

  function showError(text: string): void {
    panel.showError(text);
  }

  async function refresh(): Promise<void> {
    for (const [id, button] of navButtons) {
      button.classList.toggle("active", id === activeDashboard);
    }
    main.textContent = "";

    if (activeDashboard === "lda_topics") {
      main.appendChild(lda.el);
      return;
    }

    const params = filterToParams(appliedFilter);

    if (activeDashboard === "citations") {
      main.append(incomingChart.el, outgoingChart.el, incomingBox.el, outgoingBox.el);
      await inflight.wrap(
        api.citationSeries(params),
        (series) => {
          incomingChart.render(series.incoming);
          outgoingChart.render(series.outgoing);
          incomingBox.render(series.incoming_dist);
          outgoingBox.render(series.outgoing_dist);
        },
        (err) => showError(String(err)),
      );
      return;
    }

    const dim = activeDashboard;
    const dashLabel = DASHBOARDS.find((d) => d.id === dim)?.label ?? dim;
    perYearChart.el.querySelector("h3")!.textContent = `#${dashLabel} per year`;
    const header = document.createElement("div");
    header.className = "viz-header";
    header.appendChild(exports.el);
    if (dim !== "papers") header.appendChild(metricToggle);
    main.append(header, perYearChart.el, grid.el, boxplot.el, treemap.el);

    const effectiveMetric: Metric = dim === "papers" ? "citations" : metric;
    const requests: Promise<void>[] = [];
    requests.push(
      api
        .perYear(dim, params)
        .then((hist) => perYearChart.render(hist))
        .catch((err) => showError(String(err))),
      api
        .grid(dim, params, gridQuery.page, 50, gridQuery.sort, gridQuery.sortDir)
        .then((page) => grid.render(page))
        .catch((err) => showError(String(err))),
      api
        .distribution(dim, params, effectiveMetric)
        .then((dist) => boxplot.render(dist))
        .catch(() => boxplot.render(null)),
      api
        .topK(dim, params, topK, effectiveMetric)
        .then((list) => treemap.render(list))
        .catch((err) => showError(String(err))),
    );
    await Promise.all(requests);
  }

  panel.onApply((filter) => {
    appliedFilter = cloneFilter(filter);
    gridQuery = { page: 1, sort: gridQuery.sort, sortDir: gridQuery.sortDir };
    pushUrl();
    void refresh();
  });
  panel.onClear(() => {
    // Clearing edits the draft only; Apply loads the full corpus view.
  });

  // Restore dashboard and applied filter from a shared URL.
  const restored = stateFromSearch(location.search);
  if (DASHBOARDS.some((d) => d.id === restored.dashboard)) {
    activeDashboard = restored.dashboard;
  }
  appliedFilter = restored.filter;
  panel.setDraft(restored.filter);

  window.addEventListener("popstate", () => {
    const state = stateFromSearch(location.search);
    activeDashboard = state.dashboard;
    appliedFilter = state.filter;
    panel.setDraft(state.filter);
    void refresh();
  });

  return { root, refresh };
}

if (!import.meta.env?.TEST && typeof document !== "undefined" && document.getElementById("app")) {
  const app = createApp(document.getElementById("app")!, new ApiClient());
  void app.refresh();
}
