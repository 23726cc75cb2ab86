import { describe, expect, it } from "vitest";

import { renderValidationView } from "../src/views/validation.js";
import { VALIDATION } from "./fixtures.js";

describe("validation view", () => {
  it("shows the best match with the server-computed percentage", () => {
    const view = renderValidationView(VALIDATION, {
      names: new Map([["jim", "Jim"]]),
    });
    expect(view.querySelector(".best-match")!.textContent).toContain("Jim");
    expect(view.querySelector(".match-percent")!.textContent).toBe("72%");
  });

  it("marks every server-reported mismatch in red bold", () => {
    const view = renderValidationView(VALIDATION, { expanded: true });
    const rows = view.querySelectorAll(".mismatch");
    expect(rows.length).toBe(VALIDATION.mismatches.length);
    for (const row of rows) {
      const values = row.querySelectorAll(".mismatch-value");
      expect(values.length).toBe(2);
      for (const value of values) {
        const style = value.getAttribute("style") ?? "";
        expect(style).toContain("color: red");
        expect(style).toContain("font-weight: bold");
      }
    }
  });

  it("lists candidates in server order", () => {
    const view = renderValidationView(VALIDATION, { expanded: true });
    const ids = [...view.querySelectorAll(".candidate")].map((c) =>
      c.getAttribute("data-id"),
    );
    expect(ids).toEqual(["jim", "ada", "bo"]);
  });

  it("starts collapsed and expands on demand", () => {
    const view = renderValidationView(VALIDATION);
    const details = view.querySelector(".validation-details")!;
    expect(details.hasAttribute("hidden")).toBe(true);
    (view.querySelector(".show-details") as HTMLButtonElement).click();
    expect(details.hasAttribute("hidden")).toBe(false);
  });

  it("flags an unconfident match", () => {
    const view = renderValidationView({ ...VALIDATION, confident: false });
    expect(view.querySelector(".no-confident-match")).not.toBeNull();
  });

  it("renders deleted records with a missing placeholder", () => {
    const view = renderValidationView(VALIDATION, { expanded: true });
    const row = view.querySelector('[data-path="experience[3]"]')!;
    expect(row.textContent).toContain("(missing)");
  });
});
