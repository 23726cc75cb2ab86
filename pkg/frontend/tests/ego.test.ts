import { describe, expect, it } from "vitest";

import { radiusForValue, renderEgoGraph } from "../src/views/ego.js";
import { EGO } from "./fixtures.js";

describe("ego graph", () => {
  it("renders exactly the server's neighbors in server order", () => {
    const graph = renderEgoGraph(EGO);
    const ids = [...graph.querySelectorAll(".ego-node")].map((n) =>
      n.getAttribute("data-id"),
    );
    expect(ids).toEqual(["ada", "bo", "cai"]);
  });

  it("encodes relation value as inverse distance from the center", () => {
    const graph = renderEgoGraph(EGO, { rMin: 70, rMax: 220 });
    for (const node of graph.querySelectorAll(".ego-node")) {
      const value = Number(node.getAttribute("data-value"));
      const radius = Number(node.getAttribute("data-radius"));
      expect(radius).toBeCloseTo(radiusForValue(value, 70, 220), 6);
    }
    // stronger relation -> strictly closer
    const radii = [...graph.querySelectorAll(".ego-node")].map((n) =>
      Number(n.getAttribute("data-radius")),
    );
    expect(radii[0]).toBeLessThan(radii[1]);
    expect(radii[1]).toBeLessThan(radii[2]);
  });

  it("shows the focus at the center with a reference circle", () => {
    const graph = renderEgoGraph(EGO, { size: 520 });
    expect(graph.querySelector(".ego-focus")!.getAttribute("data-id")).toBe("jim");
    const reference = graph.querySelector(".ego-reference")!;
    expect(Number(reference.getAttribute("cx"))).toBe(260);
  });

  it("dragging a node shows the auxiliary red comparison circle", () => {
    const graph = renderEgoGraph(EGO);
    const node = graph.querySelector('.ego-node[data-id="ada"]')!;
    expect(graph.querySelector(".ego-aux")).toBeNull();
    node.dispatchEvent(new Event("pointerdown", { bubbles: true }));
    const aux = graph.querySelector(".ego-aux");
    expect(aux).not.toBeNull();
    expect(aux!.getAttribute("stroke")).toBe("red");
    expect(Number(aux!.getAttribute("r"))).toBeCloseTo(
      Number(node.getAttribute("data-radius")),
      6,
    );
    graph.dispatchEvent(new Event("pointerup", { bubbles: true }));
    expect(graph.querySelector(".ego-aux")).toBeNull();
  });

  it("includes shared-experience evidence in the tooltip", () => {
    const graph = renderEgoGraph(EGO);
    const tooltip = graph.querySelector('.ego-node[data-id="ada"] title')!;
    expect(tooltip.textContent).toContain("joint bureau");
  });
});
