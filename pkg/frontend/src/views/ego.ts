// Ego relationship graph: the focus person at the center, the top-K related
// people on a reference circle, the center distance encoding the relation
// value (radius = rMin + (1 - value) * (rMax - rMin): closer means stronger).
// Nodes can be dragged along their own circle; while dragging, an auxiliary
// red circle at that radius supports comparing other nodes against it.

import { EgoVM } from "../api.js";
import { svg } from "../dom.js";

export interface EgoOptions {
  size?: number;
  rMin?: number;
  rMax?: number;
  names?: Map<string, string>;
}

export function radiusForValue(value: number, rMin: number, rMax: number): number {
  return rMin + (1 - value) * (rMax - rMin);
}

export function renderEgoGraph(vm: EgoVM, options: EgoOptions = {}): SVGElement {
  const size = options.size ?? 520;
  const rMin = options.rMin ?? 70;
  const rMax = options.rMax ?? size / 2 - 40;
  const center = size / 2;
  const root = svg("svg", {
    class: "ego-graph",
    viewBox: `0 0 ${size} ${size}`,
    width: size,
    height: size,
    "data-focus": vm.focus,
    "data-kind": vm.kind,
    "data-k": vm.k,
  });

  root.append(
    svg("circle", {
      class: "ego-reference",
      cx: center,
      cy: center,
      r: rMax,
      fill: "none",
    }),
  );

  const edges = svg("g", { class: "ego-edges" });
  const nodes = svg("g", { class: "ego-nodes" });
  root.append(edges, nodes);

  vm.neighbors.forEach((neighbor, index) => {
    const angle = -Math.PI / 2 + (index * 2 * Math.PI) / Math.max(vm.neighbors.length, 1);
    const radius = radiusForValue(neighbor.value, rMin, rMax);
    const nx = center + radius * Math.cos(angle);
    const ny = center + radius * Math.sin(angle);

    edges.append(
      svg("line", {
        class: "ego-edge",
        x1: center,
        y1: center,
        x2: nx,
        y2: ny,
        "data-id": neighbor.id,
      }),
    );

    const group = svg("g", {
      class: "ego-node",
      transform: `translate(${nx}, ${ny})`,
      "data-id": neighbor.id,
      "data-value": neighbor.value,
      "data-radius": radius,
      "data-index": index,
    });
    group.append(
      svg("rect", { class: "ego-box", x: -34, y: -12, width: 68, height: 24, rx: 8 }),
      svg("text", {
        class: "ego-name",
        "text-anchor": "middle",
        y: 4,
        text: options.names?.get(neighbor.id) ?? neighbor.id,
      }),
    );
    const tooltip = svg("title", {});
    tooltip.textContent =
      `${neighbor.id}: ${neighbor.kind} relation ${neighbor.value.toFixed(3)}` +
      (neighbor.evidence.length
        ? "\n" +
          neighbor.evidence
            .map((e) => `${e.org}: ${e.overlap_begin}..${e.overlap_end}`)
            .join("\n")
        : "");
    group.append(tooltip);
    attachDrag(root, group, center, radius);
    nodes.append(group);
  });

  const focus = svg("g", {
    class: "ego-focus",
    transform: `translate(${center}, ${center})`,
    "data-id": vm.focus,
  });
  focus.append(
    svg("rect", { class: "ego-box focus", x: -40, y: -14, width: 80, height: 28, rx: 9 }),
    svg("text", {
      class: "ego-name",
      "text-anchor": "middle",
      y: 4,
      text: options.names?.get(vm.focus) ?? vm.focus,
    }),
  );
  root.append(focus);
  return root;
}

function attachDrag(
  root: SVGElement,
  node: SVGElement,
  center: number,
  radius: number,
): void {
  let aux: SVGElement | null = null;

  const move = (event: Event) => {
    const pointer = event as PointerEvent;
    const angle = Math.atan2(pointer.clientY - center, pointer.clientX - center);
    const nx = center + radius * Math.cos(angle);
    const ny = center + radius * Math.sin(angle);
    node.setAttribute("transform", `translate(${nx}, ${ny})`);
  };

  const finish = () => {
    aux?.remove();
    aux = null;
    root.removeEventListener("pointermove", move);
    root.removeEventListener("pointerup", finish);
  };

  node.addEventListener("pointerdown", () => {
    // auxiliary red comparison circle at this node's relation radius
    aux = svg("circle", {
      class: "ego-aux",
      cx: center,
      cy: center,
      r: radius,
      fill: "none",
      stroke: "red",
    });
    root.append(aux);
    root.addEventListener("pointermove", move);
    root.addEventListener("pointerup", finish);
  });
}
