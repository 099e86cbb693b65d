// Export buttons: CSV passes through the API's export endpoint
// unchanged; PNG rasterizes the chart's SVG on a canvas client-side.

import type { ApiClient } from "../api";

export interface ExportControls {
  el: HTMLElement;
  csvButton: HTMLButtonElement;
  pngButton: HTMLButtonElement;
}

export function downloadBlob(blob: Blob, filename: string): void {
  const link = document.createElement("a");
  link.href = URL.createObjectURL(blob);
  link.download = filename;
  link.click();
  URL.revokeObjectURL(link.href);
}

export async function svgToPngBlob(svg: SVGSVGElement, width = 800, height = 400): Promise<Blob> {
  const markup = new XMLSerializer().serializeToString(svg);
  const url = URL.createObjectURL(new Blob([markup], { type: "image/svg+xml" }));
  try {
    const image = new Image();
    await new Promise<void>((resolve, reject) => {
      image.onload = () => resolve();
      image.onerror = () => reject(new Error("could not rasterize chart"));
      image.src = url;
    });
    const canvas = document.createElement("canvas");
    canvas.width = width;
    canvas.height = height;
    const context = canvas.getContext("2d");
    if (!context) throw new Error("canvas 2d context unavailable");
    context.fillStyle = "#ffffff";
    context.fillRect(0, 0, width, height);
    context.drawImage(image, 0, 0, width, height);
    return await new Promise<Blob>((resolve, reject) => {
      canvas.toBlob((blob) => (blob ? resolve(blob) : reject(new Error("png encoding failed"))), "image/png");
    });
  } finally {
    URL.revokeObjectURL(url);
  }
}

export function showToast(text: string): void {
  const toast = document.createElement("div");
  toast.className = "toast";
  toast.textContent = text;
  document.body.appendChild(toast);
  setTimeout(() => toast.remove(), 4000);
}

export function createExportControls(
  api: ApiClient,
  endpoint: () => string,
  filter: () => URLSearchParams,
  extra: () => Record<string, string>,
  chartSvg: () => SVGSVGElement | null,
): ExportControls {
  const el = document.createElement("div");
  el.className = "export-controls";

  const csvButton = document.createElement("button");
  csvButton.textContent = "Export CSV";
  csvButton.addEventListener("click", () => {
    api
      .exportCsv(endpoint(), filter(), extra())
      .then((blob) => downloadBlob(blob, endpoint().replace("/", "-") + ".csv"))
      .catch((err) => showToast(`CSV export failed: ${err}`));
  });

  const pngButton = document.createElement("button");
  pngButton.textContent = "Export PNG";
  pngButton.addEventListener("click", () => {
    const svg = chartSvg();
    if (!svg) {
      showToast("no chart to export");
      return;
    }
    svgToPngBlob(svg)
      .then((blob) => downloadBlob(blob, endpoint().replace("/", "-") + ".png"))
      .catch((err) => showToast(`PNG export failed: ${err}`));
  });

  el.append(csvButton, pngButton);
  return { el, csvButton, pngButton };
}
