// Resume validation view: collapsed best-match summary with the matching
// percentage, an expandable candidate list, and every server-reported field
// mismatch rendered in red bold.

import { ValidationVM } from "../api.js";
import { el } from "../dom.js";

export interface ValidationOptions {
  names?: Map<string, string>;
  expanded?: boolean;
}

export function renderValidationView(
  vm: ValidationVM,
  options: ValidationOptions = {},
): HTMLElement {
  const root = el("div", { class: "validation-view", "data-best": vm.best });
  const bestName = options.names?.get(vm.best) ?? vm.best;

  const summary = el("div", { class: "validation-summary" }, [
    el("span", { class: "best-match" }, [
      `Most similar: ${bestName} — `,
      el("span", { class: "match-percent" }, [`${vm.percent}%`]),
    ]),
  ]);
  if (!vm.confident) {
    summary.append(el("span", { class: "no-confident-match" }, [" no confident match"]));
  }
  const toggle = el("button", { class: "show-details" }, ["Show Details"]);
  summary.append(toggle);
  root.append(summary);

  const details = el("div", { class: "validation-details" });
  if (!(options.expanded ?? false)) details.setAttribute("hidden", "hidden");
  toggle.addEventListener("click", () => {
    if (details.hasAttribute("hidden")) details.removeAttribute("hidden");
    else details.setAttribute("hidden", "hidden");
  });

  details.append(
    el("h4", {}, ["Candidates"]),
    el(
      "ol",
      { class: "candidate-list" },
      vm.candidates.map((candidate) =>
        el("li", { class: "candidate", "data-id": candidate.resume_id }, [
          `${options.names?.get(candidate.resume_id) ?? candidate.resume_id}`,
          el("span", { class: "candidate-degree" }, [
            ` ${(candidate.degree * 100).toFixed(0)}%`,
          ]),
        ]),
      ),
    ),
  );

  details.append(el("h4", {}, ["Mismatches"]));
  if (vm.mismatches.length === 0) {
    details.append(el("p", { class: "no-mismatches" }, ["No mismatching fields."]));
  } else {
    const table = el("table", { class: "mismatch-table" }, [
      el("thead", {}, [
        el("tr", {}, [
          el("th", {}, ["Field"]),
          el("th", {}, ["Test Resume"]),
          el("th", {}, ["Standard Resume"]),
        ]),
      ]),
    ]);
    const body = el("tbody", {});
    for (const mismatch of vm.mismatches) {
      body.append(
        el("tr", { class: "mismatch", "data-path": mismatch.path }, [
          el("td", { class: "mismatch-path" }, [mismatch.path]),
          mismatchCell(mismatch.test_value, "(missing)"),
          mismatchCell(mismatch.standard_value, "(not in standard)"),
        ]),
      );
    }
    table.append(body);
    details.append(table);
  }
  root.append(details);
  return root;
}

function mismatchCell(value: string | null, placeholder: string): HTMLElement {
  const cell = el("td", {});
  cell.append(
    el(
      "span",
      {
        class: "mismatch-value",
        style: "color: red; font-weight: bold;",
      },
      [value ?? placeholder],
    ),
  );
  return cell;
}
