// Career trajectory chart: one color-filled rectangle per experience record,
// assembled head-to-tail with vertical connectors into a rank ladder.
// Rendering is pure: the same payloads always yield the same DOM.

import { TrajectoryVM } from "../api.js";
import { svg } from "../dom.js";

export interface TrajectoryOptions {
  width?: number;
  height?: number;
  colors?: Map<string, string>; // resume id -> color
  names?: Map<string, string>;
  animateReveal?: boolean;
}

const MARGIN = { top: 16, right: 16, bottom: 28, left: 34 };
const RANKS = [0, 1, 2, 3, 4, 5, 6, 7, 8];
const LANE_OFFSET = 3; // tiny per-resume y offset so overlapping ladders stay legible

export function renderTrajectoryChart(
  models: TrajectoryVM[],
  options: TrajectoryOptions = {},
): SVGElement {
  const width = options.width ?? 720;
  const height = options.height ?? 320;
  const root = svg("svg", {
    class: "trajectory-chart",
    viewBox: `0 0 ${width} ${height}`,
    width,
    height,
  });

  const xs = models.flatMap((m) => m.segments.flatMap((s) => [s.x_begin, s.x_end]));
  if (xs.length === 0) {
    root.append(svg("text", { x: width / 2, y: height / 2, text: "no trajectories" }));
    return root;
  }
  const xMin = Math.min(...xs);
  const xMax = Math.max(...xs);
  const spanX = xMax - xMin || 1;
  const plotW = width - MARGIN.left - MARGIN.right;
  const plotH = height - MARGIN.top - MARGIN.bottom;
  const x = (v: number) => MARGIN.left + ((v - xMin) / spanX) * plotW;
  const y = (rank: number) => MARGIN.top + plotH - (rank / 8) * plotH;
  const barH = Math.min(14, plotH / 12);

  const axes = svg("g", { class: "axes" });
  for (const rank of RANKS) {
    axes.append(
      svg("line", {
        x1: MARGIN.left,
        y1: y(rank),
        x2: width - MARGIN.right,
        y2: y(rank),
        class: "gridline",
      }),
      svg("text", {
        x: MARGIN.left - 6,
        y: y(rank) + 3,
        "text-anchor": "end",
        class: "axis-label",
        text: String(rank),
      }),
    );
  }
  axes.append(
    svg("text", {
      x: MARGIN.left,
      y: height - 8,
      class: "axis-label",
      text: xMin.toFixed(0),
    }),
    svg("text", {
      x: width - MARGIN.right,
      y: height - 8,
      "text-anchor": "end",
      class: "axis-label",
      text: xMax.toFixed(0),
    }),
  );
  root.append(axes);

  models.forEach((model, lane) => {
    const color = options.colors?.get(model.resume_id) ?? "#1f77b4";
    const offset = lane * LANE_OFFSET;
    const group = svg("g", {
      class: "trajectory",
      "data-resume": model.resume_id,
      "data-mode": model.mode,
    });
    model.segments.forEach((segment, index) => {
      const rect = svg("rect", {
        class: "traj-rect" + (options.animateReveal ? " reveal" : ""),
        x: x(segment.x_begin),
        y: y(segment.rank) - barH / 2 + offset,
        width: Math.max(1, x(segment.x_end) - x(segment.x_begin)),
        height: barH,
        fill: color,
        "data-resume": model.resume_id,
        "data-rank": segment.rank,
        "data-index": index,
        "data-org": segment.org,
        "data-title": segment.title,
        "data-location": segment.location,
        "data-x-begin": segment.x_begin,
        "data-x-end": segment.x_end,
      });
      if (options.animateReveal) {
        (rect as SVGElement & { style: CSSStyleDeclaration }).style.animationDelay =
          `${(index * 0.18).toFixed(2)}s`;
      }
      const tooltip = svg("title", {});
      tooltip.textContent =
        `${segment.title} of ${segment.org}` +
        (segment.location ? ` (${segment.location})` : "") +
        ` — rank ${segment.rank}, ${segment.x_begin.toFixed(1)}..${segment.x_end.toFixed(1)}`;
      rect.append(tooltip);
      group.append(rect);
      if (index > 0) {
        const previous = model.segments[index - 1];
        group.append(
          svg("line", {
            class: "traj-connector",
            x1: x(previous.x_end),
            y1: y(previous.rank) + offset,
            x2: x(segment.x_begin),
            y2: y(segment.rank) + offset,
            stroke: color,
          }),
        );
      }
    });
    root.append(group);
  });

  const legend = svg("g", { class: "legend" });
  models.forEach((model, index) => {
    const color = options.colors?.get(model.resume_id) ?? "#1f77b4";
    const yPos = MARGIN.top + index * 16;
    legend.append(
      svg("rect", {
        x: width - MARGIN.right - 140,
        y: yPos - 8,
        width: 10,
        height: 10,
        fill: color,
      }),
      svg("text", {
        x: width - MARGIN.right - 126,
        y: yPos + 1,
        class: "legend-label",
        text: `${options.names?.get(model.resume_id) ?? model.resume_id}` +
          (model.pattern ? ` (${model.pattern})` : ""),
      }),
    );
  });
  root.append(legend);
  return root;
}
