// Detail window for one resume: basic info editor, raw text pane, and the
// career experience list with the star rank editor and pattern combo box.
// Every edit goes through a callback that POSTs to the server; the window is
// re-rendered from the server's state afterwards, never patched locally.

import { ResumeDetailVM } from "../api.js";
import { el } from "../dom.js";

export interface DetailCallbacks {
  onRankFix?: (edit: {
    record_index: number;
    org_index: number;
    title_index: number;
    rank: number;
  }) => void;
  onLabel?: (pattern: string) => void;
  onRetrain?: () => void;
  onBasicEdit?: (field: string, value: string) => void;
}

const PATTERNS = ["ascending", "steady", "recessionary"];
const BASIC_FIELDS: [string, string][] = [
  ["name", "Name"],
  ["gender", "Gender"],
  ["nation", "Nation"],
  ["birth_place", "Birth place"],
  ["date_birth", "Born"],
  ["date_work", "Work since"],
  ["date_party", "Party since"],
];

export function renderDetailWindow(
  vm: ResumeDetailVM,
  callbacks: DetailCallbacks = {},
): HTMLElement {
  const root = el("div", { class: "detail-window", "data-resume": vm.resume.resume_id });

  const basic = el("section", { class: "basic-info" }, [
    el("h3", {}, ["Basic Info"]),
  ]);
  const info = vm.resume.basic_info as unknown as Record<string, string | null>;
  for (const [field, label] of BASIC_FIELDS) {
    const input = el("input", {
      class: "basic-field",
      "data-field": field,
      value: info[field] ?? "",
    });
    const save = el("button", { class: "basic-save", "data-field": field }, ["save"]);
    save.addEventListener("click", () =>
      callbacks.onBasicEdit?.(field, (input as HTMLInputElement).value),
    );
    basic.append(el("label", { class: "basic-row" }, [label + " ", input, save]));
  }
  root.append(basic);

  const rawText = el("section", { class: "resume-text" }, [
    el("h3", {}, ["Resume Text"]),
    el("pre", { class: "raw-text" }, [vm.raw_text ?? "(no raw text on record)"]),
  ]);
  if (vm.warnings.length) {
    rawText.append(
      el("ul", { class: "parse-warnings" },
        vm.warnings.map((w) => el("li", {}, [w]))),
    );
  }
  root.append(rawText);

  const experiences = el("section", { class: "experiences" }, [
    el("h3", {}, ["Career Experiences"]),
  ]);
  vm.resume.experience.forEach((record, recordIndex) => {
    const span = `${record.date_begin} .. ${record.date_end}`;
    const place = [record.location.city, record.location.province]
      .filter(Boolean)
      .join(", ");
    const recordEl = el("div", { class: "experience-record", "data-record": recordIndex }, [
      el("div", { class: "record-span" }, [span + (place ? `  @ ${place}` : "")]),
    ]);
    record.organizations.forEach((org, orgIndex) => {
      const orgEl = el("div", { class: "record-org" }, [
        el("span", { class: "org-name" }, [org.organization_name]),
      ]);
      org.titles.forEach((title, titleIndex) => {
        const row = el("div", { class: "title-row" }, [
          el("span", { class: "title-name" }, [title.title_name]),
        ]);
        const stars = el("span", {
          class: "stars",
          "data-record": recordIndex,
          "data-org": orgIndex,
          "data-title": titleIndex,
          "data-rank": title.rank ?? "",
        });
        for (let rank = 0; rank <= 8; rank++) {
          const filled = title.rank !== null && rank <= title.rank;
          const star = el(
            "button",
            {
              class: "star" + (filled ? " filled" : ""),
              "data-rank": rank,
              title: `set rank ${rank}`,
            },
            [filled ? "★" : "☆"],
          );
          star.addEventListener("click", () =>
            callbacks.onRankFix?.({
              record_index: recordIndex,
              org_index: orgIndex,
              title_index: titleIndex,
              rank,
            }),
          );
          stars.append(star);
        }
        if (title.rank_source === "expert") {
          row.append(el("span", { class: "expert-badge", title: "expert-set rank" }, ["expert"]));
        }
        row.append(stars);
        orgEl.append(row);
      });
      recordEl.append(orgEl);
    });
    experiences.append(recordEl);
  });
  root.append(experiences);

  const labelBar = el("div", { class: "label-bar" });
  const combo = el("select", { class: "pattern-combo" });
  combo.append(el("option", { value: "" }, ["(unlabeled)"]));
  for (const pattern of PATTERNS) {
    const option = el("option", { value: pattern }, [pattern]);
    if (vm.resume.pattern_label === pattern) option.setAttribute("selected", "selected");
    combo.append(option);
  }
  combo.addEventListener("change", () => {
    const value = (combo as HTMLSelectElement).value;
    if (value) callbacks.onLabel?.(value);
  });
  const retrain = el("button", { class: "retrain-button" }, ["Retrain"]);
  retrain.addEventListener("click", () => callbacks.onRetrain?.());
  labelBar.append(
    el("span", {}, ["Career pattern: "]),
    combo,
    vm.resume.label_source
      ? el("span", { class: "label-source" }, [` (${vm.resume.label_source})`])
      : "",
    retrain,
  );
  root.append(labelBar);
  return root;
}
