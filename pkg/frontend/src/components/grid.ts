// C2: details grid. Sortable columns, pagination, values rendered
// exactly as served (lists joined for display only).

import type { DetailsPage } from "../api";

export interface GridQuery {
  page: number;
  sort?: string;
  sortDir: "asc" | "desc";
}

export interface Grid {
  el: HTMLElement;
  table: HTMLTableElement;
  render(page: DetailsPage): void;
  onQueryChange(cb: (query: GridQuery) => void): void;
}

const UNSORTABLE = new Set(["authors"]);

export function createGrid(title: string): Grid {
  const el = document.createElement("section");
  el.className = "panel grid";
  const heading = document.createElement("h3");
  heading.textContent = title;
  el.appendChild(heading);

  const table = document.createElement("table");
  el.appendChild(table);

  const pager = document.createElement("div");
  pager.className = "pager";
  const prev = document.createElement("button");
  prev.textContent = "Prev";
  const next = document.createElement("button");
  next.textContent = "Next";
  const status = document.createElement("span");
  status.className = "pager-status";
  pager.append(prev, status, next);
  el.appendChild(pager);

  let callback: ((query: GridQuery) => void) | null = null;
  const query: GridQuery = { page: 1, sort: undefined, sortDir: "asc" };
  let lastPage: DetailsPage | null = null;

  function emit(): void {
    if (callback) callback({ ...query });
  }

  prev.addEventListener("click", () => {
    if (query.page > 1) {
      query.page -= 1;
      emit();
    }
  });
  next.addEventListener("click", () => {
    if (lastPage && query.page * lastPage.page_size < lastPage.total) {
      query.page += 1;
      emit();
    }
  });

  function render(page: DetailsPage): void {
    lastPage = page;
    query.page = page.page;
    table.textContent = "";

    const head = table.createTHead().insertRow();
    for (const column of page.columns) {
      const th = document.createElement("th");
      th.textContent = column;
      th.dataset.column = column;
      if (!UNSORTABLE.has(column)) {
        th.classList.add("sortable");
        if (query.sort === column) th.classList.add(`sorted-${query.sortDir}`);
        th.addEventListener("click", () => {
          query.sortDir = query.sort === column && query.sortDir === "asc" ? "desc" : "asc";
          query.sort = column;
          query.page = 1;
          emit();
        });
      }
      head.appendChild(th);
    }

    const body = table.createTBody();
    for (const row of page.rows) {
      const tr = body.insertRow();
      for (const column of page.columns) {
        const value = row[column];
        const cell = tr.insertCell();
        cell.dataset.column = column;
        if (Array.isArray(value)) {
          cell.textContent = value.join("; ");
        } else if (value === null || value === undefined) {
          cell.textContent = "";
        } else {
          cell.textContent = String(value);
        }
      }
    }

    const start = (page.page - 1) * page.page_size;
    status.textContent = page.total
      ? `${start + 1}-${start + page.rows.length} of ${page.total}`
      : "0 of 0";
    prev.disabled = page.page <= 1;
    next.disabled = start + page.rows.length >= page.total;
  }

  function onQueryChange(cb: (q: GridQuery) => void): void {
    callback = cb;
  }

  return { el, table, render, onQueryChange };
}
