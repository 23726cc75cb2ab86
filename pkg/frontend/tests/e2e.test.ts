// Live end-to-end run: boots the real engine HTTP service on a scratch
// corpus, then drives the UI renderers with genuine server payloads.
// Enabled via CVMINER_E2E=1 (npm run test:e2e).
// @vitest-environment-options { "url": "http://127.0.0.1:17861" }

import { spawn, execFileSync, ChildProcess } from "node:child_process";
import { mkdtempSync, rmSync, writeFileSync, mkdirSync } from "node:fs";
import { tmpdir } from "node:os";
import { join } from "node:path";
import { afterAll, beforeAll, describe, expect, it } from "vitest";

import { ApiClient } from "../src/api.js";
import { renderDetailWindow } from "../src/views/detail.js";
import { renderTrajectoryChart } from "../src/views/trajectory.js";
import { renderValidationView } from "../src/views/validation.js";

const PORT = 17861;
const BASE = `http://127.0.0.1:${PORT}`;

const JIM_TEXT = `Jim; male; ethnic Han; born on August 2nd, 1975; come from Changsha city, Hunan province. Work on January, 1990; Joined the Chinese Communist Party on December, 1991. Currently is the governor of Hunan Province.

Year 1989 ~ 1992: Appointed as the secretary of Party Branch of Health Bureau of Ningxiang county, Hunan province.

Year 1992 ~ 1995: Appointed as the county head of County Party Committee of Ningxiang county, Hunan province.

Year 1995 ~ 1998: Appointed as the vice mayor of Municipal Party Committee of Changsha city, Hunan province.

Year 1998 ~ 2002: Appointed as the mayor of Municipal Party Committee of Changsha city, Hunan province.

Year 2002 ~ 2010: Appointed as the vice governor of Provincial Party Committee of Hunan province.

Year 2010-Up to now: Appointed as the governor of Provincial Party Committee of Hunan province.
`;

const ADA_TEXT = `Ada Keller; female; ethnic Hui; born on March 9, 1955; come from Northfield city, Greenland province.

Year 1980 ~ 1990: appointed as the clerk of Northfield Finance Bureau of Northfield city, Greenland province.

Year 1990 ~ 2001: appointed as the mayor of Northfield Trade Committee of Northfield city, Greenland province.
`;

const BO_TEXT = `Bo Chen; male; ethnic Han; born on July 2, 1960; come from Cedarvale city, Greenland province.

Year 1985 ~ 1995: appointed as the secretary of Cedarvale Water Bureau of Cedarvale city, Greenland province.

Year 1995 ~ 2004: appointed as the county head of Cedarvale Steel Company of Cedarvale city, Greenland province.
`;

let workdir: string;
let server: ChildProcess | null = null;
const api = new ApiClient(BASE);

async function waitForServer(timeoutMs = 30000): Promise<void> {
  const deadline = Date.now() + timeoutMs;
  while (Date.now() < deadline) {
    try {
      const res = await fetch(`${BASE}/resumes`);
      if (res.ok) return;
    } catch {
      // not up yet
    }
    await new Promise((resolve) => setTimeout(resolve, 250));
  }
  throw new Error("engine service did not come up in time");
}

beforeAll(async () => {
  workdir = mkdtempSync(join(tmpdir(), "cvminer-e2e-"));
  const resumeDir = join(workdir, "resumes");
  mkdirSync(resumeDir);
  writeFileSync(join(resumeDir, "jim.txt"), JIM_TEXT);
  writeFileSync(join(resumeDir, "ada.txt"), ADA_TEXT);
  writeFileSync(join(resumeDir, "bo.txt"), BO_TEXT);
  const store = join(workdir, "corpus");
  execFileSync(
    "python3",
    ["-m", "cvminer.cli", "ingest", resumeDir, "--store", store, "--as-of", "2015-12-11"],
    { stdio: "pipe" },
  );
  server = spawn(
    "python3",
    ["-m", "cvminer.cli", "serve", "--addr", `127.0.0.1:${PORT}`, "--store", store],
    { stdio: "pipe" },
  );
  await waitForServer();
}, 60000);

afterAll(() => {
  server?.kill();
  if (workdir) rmSync(workdir, { recursive: true, force: true });
});

describe("live end-to-end", () => {
  it("renders six ladder rectangles, topmost at rank 6, from the live API", async () => {
    const vm = await api.trajectory("jim", "year");
    expect(vm.segments.length).toBe(6);
    const chart = renderTrajectoryChart([vm]);
    const rects = [...chart.querySelectorAll(".traj-rect")];
    expect(rects.length).toBe(6);
    const topmost = rects.reduce((best, rect) =>
      Number(rect.getAttribute("y")) < Number(best.getAttribute("y")) ? rect : best,
    );
    expect(topmost.getAttribute("data-rank")).toBe("6");
  });

  it("round-trips a star-click rank edit through the live API and re-renders", async () => {
    let detail = await api.getResume("jim");
    const before = renderDetailWindow(detail);
    expect(
      before.querySelector('.stars[data-record="0"]')!.querySelectorAll(".star.filled")
        .length,
    ).toBe(1); // parsed rank 0

    // the UI's star handler: clicking the 4th star POSTs rank 3
    const result = await api.fixRank(
      "jim",
      { record_index: 0, org_index: 0, title_index: 0, rank: 3 },
      detail.version,
    );
    expect(result.version).toBeGreaterThan(detail.version);

    detail = await api.getResume("jim");
    const after = renderDetailWindow(detail);
    const stars = after.querySelector('.stars[data-record="0"]')!;
    expect(stars.querySelectorAll(".star.filled").length).toBe(4);
    expect(after.querySelector(".expert-badge")).not.toBeNull();

    const vm = await api.trajectory("jim", "year");
    const chart = renderTrajectoryChart([vm]);
    const first = chart.querySelector('.traj-rect[data-index="0"]')!;
    expect(first.getAttribute("data-rank")).toBe("3");
  });

  it("stale versions are rejected with 409 for the retry prompt", async () => {
    const error = await api
      .fixRank("jim", { record_index: 0, org_index: 0, title_index: 0, rank: 2 }, 1)
      .catch((e) => e);
    expect(error.status).toBe(409);
  });

  it("validates an unknown corrupted resume and renders mismatches red bold", async () => {
    const corrupted = JIM_TEXT.replace("Jim; ", "").replace(
      "Appointed as the mayor of Municipal Party Committee",
      "Appointed as the clerk of Municipal Party Committee",
    );
    const report = await api.validate(corrupted);
    expect(report.best).toBe("jim");
    expect(report.mismatches.length).toBeGreaterThan(0);

    const view = renderValidationView(report, { expanded: true });
    const rows = view.querySelectorAll(".mismatch");
    expect(rows.length).toBe(report.mismatches.length);
    for (const row of rows) {
      for (const value of row.querySelectorAll(".mismatch-value")) {
        const style = value.getAttribute("style") ?? "";
        expect(style).toContain("color: red");
        expect(style).toContain("font-weight: bold");
      }
    }
    expect(view.querySelector(".match-percent")!.textContent).toBe(
      `${report.percent}%`,
    );
  });

  it("age mode equals year mode minus the birth year, per the live API", async () => {
    const year = await api.trajectory("jim", "year");
    const age = await api.trajectory("jim", "age");
    for (let i = 0; i < year.segments.length; i++) {
      expect(age.segments[i].x_begin).toBeCloseTo(year.segments[i].x_begin - 1975, 6);
    }
  });
});
