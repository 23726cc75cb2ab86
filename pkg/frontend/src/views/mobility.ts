// Organization-individual mobility map: four 90-degree sectors around a
// central compound disk, nodes sized by rank at positions computed by the
// server. Selecting a community highlights its members and hyalinizes the
// rest; a selected compound node shows auxiliary lines to its communities.

import { GeometryVM, MobilityVM } from "../api.js";
import { svg } from "../dom.js";

export interface MobilityOptions {
  size?: number;
  selectedCommunity?: string | null;
  selectedNode?: string | null;
  onSelectCommunity?: (community: string | null) => void;
  onSelectNode?: (id: string | null) => void;
}

const COMMUNITY_COLORS: Record<string, string> = {
  government: "#4c78a8",
  grass_roots: "#59a14f",
  state_owned_enterprise: "#e45756",
  non_profit: "#f2a104",
  compound: "#9467bd",
};

export function renderMobilityMap(
  vm: MobilityVM,
  geometry: GeometryVM,
  options: MobilityOptions = {},
): SVGElement {
  const R = geometry.outer_radius * 1.06;
  const root = svg("svg", {
    class: "mobility-map",
    viewBox: `${-R} ${-R} ${2 * R} ${2 * R}`,
    width: options.size ?? 640,
    height: options.size ?? 640,
    "data-timestamp": vm.timestamp,
  });

  const regions = svg("g", { class: "regions" });
  const sectorSpan = (2 * Math.PI) / geometry.sector_order.length;
  geometry.sector_order.forEach((community, index) => {
    const theta0 = index * sectorSpan;
    const theta1 = theta0 + sectorSpan;
    const path = sectorPath(geometry.disk_radius, geometry.outer_radius, theta0, theta1);
    const sector = svg("path", {
      class:
        "sector" + (options.selectedCommunity === community ? " selected" : ""),
      d: path,
      fill: COMMUNITY_COLORS[community] ?? "#888",
      "fill-opacity": 0.12,
      "data-community": community,
    });
    sector.addEventListener("click", () =>
      options.onSelectCommunity?.(
        options.selectedCommunity === community ? null : community,
      ),
    );
    regions.append(sector);
    const mid = (theta0 + theta1) / 2;
    const labelR = geometry.outer_radius + 8;
    regions.append(
      svg("text", {
        class: "sector-label",
        x: labelR * Math.cos(mid) * 0.92,
        y: -labelR * Math.sin(mid) * 0.92,
        "text-anchor": "middle",
        text: community.replace(/_/g, " "),
      }),
    );
  });
  const disk = svg("circle", {
    class:
      "sector compound-disk" +
      (options.selectedCommunity === "compound" ? " selected" : ""),
    cx: 0,
    cy: 0,
    r: geometry.disk_radius,
    fill: COMMUNITY_COLORS.compound,
    "fill-opacity": 0.12,
    "data-community": "compound",
  });
  disk.addEventListener("click", () =>
    options.onSelectCommunity?.(
      options.selectedCommunity === "compound" ? null : "compound",
    ),
  );
  regions.append(disk);
  root.append(regions);

  // time radials along the four sector boundaries
  const boundaries = svg("g", { class: "time-radials" });
  for (let index = 0; index < geometry.sector_order.length; index++) {
    const theta = index * sectorSpan;
    boundaries.append(
      svg("line", {
        class: "time-radial",
        x1: geometry.disk_radius * Math.cos(theta),
        y1: -geometry.disk_radius * Math.sin(theta),
        x2: geometry.outer_radius * Math.cos(theta),
        y2: -geometry.outer_radius * Math.sin(theta),
      }),
    );
  }
  root.append(boundaries);

  const auxiliary = svg("g", { class: "auxiliary-links" });
  const nodes = svg("g", { class: "mobility-nodes" });
  root.append(auxiliary, nodes);

  for (const node of vm.nodes) {
    const dimmed =
      options.selectedCommunity != null && node.community !== options.selectedCommunity;
    const circle = svg("circle", {
      class:
        "mob-node" +
        (dimmed ? " hyalinized" : "") +
        (options.selectedNode === node.id ? " selected" : ""),
      cx: node.x,
      cy: -node.y,
      r: geometry.node_unit * (node.rank + 1),
      fill: COMMUNITY_COLORS[node.community] ?? "#888",
      "fill-opacity": dimmed ? 0.15 : 0.85,
      "data-id": node.id,
      "data-community": node.community,
      "data-rank": node.rank,
    });
    const tooltip = svg("title", {});
    tooltip.textContent = `${node.id}: ${node.community}, rank ${node.rank}`;
    circle.append(tooltip);
    circle.addEventListener("click", () =>
      options.onSelectNode?.(options.selectedNode === node.id ? null : node.id),
    );
    nodes.append(circle);

    if (options.selectedNode === node.id && node.links.length > 0) {
      for (const community of node.links) {
        const index = geometry.sector_order.indexOf(community);
        if (index < 0) continue;
        const mid = index * sectorSpan + sectorSpan / 2;
        const targetR = (geometry.disk_radius + geometry.outer_radius) / 2;
        auxiliary.append(
          svg("line", {
            class: "aux-link",
            x1: node.x,
            y1: -node.y,
            x2: targetR * Math.cos(mid),
            y2: -targetR * Math.sin(mid),
            "data-community": community,
          }),
        );
      }
    }
  }

  const events = svg("g", { class: "mobility-events", "data-count": vm.events.length });
  root.append(events);
  attachZoomPan(root, R);
  return root;
}

function attachZoomPan(root: SVGElement, initialR: number): void {
  let view = { x: -initialR, y: -initialR, w: 2 * initialR, h: 2 * initialR };
  let panFrom: { x: number; y: number } | null = null;

  const apply = () =>
    root.setAttribute("viewBox", `${view.x} ${view.y} ${view.w} ${view.h}`);

  root.addEventListener("wheel", (event) => {
    const wheel = event as WheelEvent;
    wheel.preventDefault();
    const factor = wheel.deltaY > 0 ? 1.2 : 1 / 1.2;
    const cx = view.x + view.w / 2;
    const cy = view.y + view.h / 2;
    view = {
      w: view.w * factor,
      h: view.h * factor,
      x: cx - (view.w * factor) / 2,
      y: cy - (view.h * factor) / 2,
    };
    apply();
  });

  root.addEventListener("pointerdown", (event) => {
    const pointer = event as PointerEvent;
    if ((pointer.target as Element).classList?.contains("mob-node")) return;
    panFrom = { x: pointer.clientX, y: pointer.clientY };
  });
  root.addEventListener("pointermove", (event) => {
    if (!panFrom) return;
    const pointer = event as PointerEvent;
    const scale = view.w / Number(root.getAttribute("width") || view.w);
    view.x -= (pointer.clientX - panFrom.x) * scale;
    view.y -= (pointer.clientY - panFrom.y) * scale;
    panFrom = { x: pointer.clientX, y: pointer.clientY };
    apply();
  });
  root.addEventListener("pointerup", () => {
    panFrom = null;
  });
}

function sectorPath(r0: number, r1: number, theta0: number, theta1: number): string {
  // svg y axis points down; engine coordinates point up, hence the sign flips
  const p = (r: number, t: number) => `${r * Math.cos(t)} ${-r * Math.sin(t)}`;
  const large = theta1 - theta0 > Math.PI ? 1 : 0;
  return (
    `M ${p(r0, theta0)} ` +
    `L ${p(r1, theta0)} ` +
    `A ${r1} ${r1} 0 ${large} 0 ${p(r1, theta1)} ` +
    `L ${p(r0, theta1)} ` +
    `A ${r0} ${r0} 0 ${large} 1 ${p(r0, theta0)} Z`
  );
}

export function interpolateSnapshots(
  a: MobilityVM,
  b: MobilityVM,
  fraction: number,
): MobilityVM {
  // linear position interpolation between two server snapshots; nodes present
  // in only one snapshot keep that snapshot's state
  const byId = new Map(a.nodes.map((n) => [n.id, n]));
  const nodes = b.nodes.map((nodeB) => {
    const nodeA = byId.get(nodeB.id);
    if (!nodeA) return nodeB;
    return {
      ...nodeB,
      x: nodeA.x + (nodeB.x - nodeA.x) * fraction,
      y: nodeA.y + (nodeB.y - nodeA.y) * fraction,
      community: fraction < 1 ? nodeA.community : nodeB.community,
    };
  });
  for (const nodeA of a.nodes) {
    if (!b.nodes.some((n) => n.id === nodeA.id)) nodes.push(nodeA);
  }
  return {
    timestamp: fraction < 1 ? a.timestamp : b.timestamp,
    nodes,
    events: fraction < 1 ? [] : b.events,
  };
}
