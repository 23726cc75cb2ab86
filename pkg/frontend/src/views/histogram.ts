// Statistical histogram: gray corpus-mean bars as the baseline, an optional
// colored overlay for one individual's per-rank years.

import { HistogramVM } from "../api.js";
import { svg } from "../dom.js";

export interface HistogramOptions {
  width?: number;
  height?: number;
  color?: string;
}

const MARGIN = { top: 14, right: 10, bottom: 24, left: 30 };

export function renderHistogram(
  vm: HistogramVM,
  options: HistogramOptions = {},
): SVGElement {
  const width = options.width ?? 420;
  const height = options.height ?? 220;
  const root = svg("svg", {
    class: "histogram",
    viewBox: `0 0 ${width} ${height}`,
    width,
    height,
    "data-count": vm.count,
  });
  const plotW = width - MARGIN.left - MARGIN.right;
  const plotH = height - MARGIN.top - MARGIN.bottom;
  const peak = Math.max(...vm.mean_years, ...(vm.individual?.t ?? []), 1e-9);
  const bandW = plotW / 9;

  vm.mean_years.forEach((mean, rank) => {
    const h = (mean / peak) * plotH;
    const bar = svg("rect", {
      class: "hist-mean",
      x: MARGIN.left + rank * bandW + 2,
      y: MARGIN.top + plotH - h,
      width: bandW - 4,
      height: h,
      fill: "#b0b0b0",
      "data-rank": rank,
      "data-mean": mean,
    });
    const tooltip = svg("title", {});
    tooltip.textContent = `rank ${rank}: corpus mean ${mean.toFixed(2)} years`;
    bar.append(tooltip);
    root.append(bar);
    root.append(
      svg("text", {
        x: MARGIN.left + rank * bandW + bandW / 2,
        y: height - 8,
        "text-anchor": "middle",
        class: "axis-label",
        text: String(rank),
      }),
    );
  });

  if (vm.individual) {
    vm.individual.t.forEach((years, rank) => {
      const h = (years / peak) * plotH;
      const bar = svg("rect", {
        class: "hist-individual",
        x: MARGIN.left + rank * bandW + bandW / 4,
        y: MARGIN.top + plotH - h,
        width: bandW / 2,
        height: h,
        fill: options.color ?? "#1f77b4",
        "data-rank": rank,
        "data-years": years,
        "data-resume": vm.individual!.resume_id,
      });
      const tooltip = svg("title", {});
      tooltip.textContent =
        `rank ${rank}: ${vm.individual!.resume_id} ${years.toFixed(2)} years`;
      bar.append(tooltip);
      root.append(bar);
    });
  }
  return root;
}
