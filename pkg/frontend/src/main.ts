// Workbench shell: object manage panel on the left, the analysis panels on
// the right. All domain data comes from the API; panels re-render from fresh
// server payloads after every mutation (no locally computed values).

import { ApiClient, ApiError, ResumeList, TrajectoryVM } from "./api.js";
import { clear, el } from "./dom.js";
import { NoticeArea } from "./notices.js";
import { ViewState } from "./state.js";
import { renderDetailWindow } from "./views/detail.js";
import { renderEgoGraph } from "./views/ego.js";
import { renderHistogram } from "./views/histogram.js";
import { interpolateSnapshots, renderMobilityMap } from "./views/mobility.js";
import { renderTrajectoryChart } from "./views/trajectory.js";
import { renderValidationView } from "./views/validation.js";

export class Workbench {
  readonly state = new ViewState();
  readonly notices = new NoticeArea();
  private names = new Map<string, string>();
  private version = 0;
  private selectedCommunity: string | null = null;
  private selectedNode: string | null = null;
  private animationTimer: number | null = null;

  private panels = {
    manage: el("div", { class: "panel manage-panel" }),
    chart: el("div", { class: "panel chart-panel" }),
    histogram: el("div", { class: "panel histogram-panel" }),
    ego: el("div", { class: "panel ego-panel" }),
    detail: el("div", { class: "panel detail-panel" }),
    validation: el("div", { class: "panel validation-panel" }),
    mobility: el("div", { class: "panel mobility-panel" }),
  };

  constructor(private api: ApiClient, private root: HTMLElement) {}

  async start(): Promise<void> {
    this.root.append(
      this.notices.element,
      el("div", { class: "workbench" }, [
        this.panels.manage,
        el("div", { class: "main-column" }, [
          this.panels.chart,
          el("div", { class: "row" }, [this.panels.histogram, this.panels.ego]),
          el("div", { class: "row" }, [this.panels.detail, this.panels.validation]),
          this.panels.mobility,
        ]),
      ]),
    );
    await this.refreshAll();
  }

  // -- data flows -----------------------------------------------------------

  private async guard<T>(work: () => Promise<T>, retry: () => void): Promise<T | null> {
    try {
      return await work();
    } catch (error) {
      if (error instanceof ApiError && error.status === 409) {
        this.notices.notify("Someone else changed the corpus.", {
          label: "Refresh & retry",
          run: () => void this.refreshAll().then(retry),
        });
      } else if (error instanceof ApiError) {
        this.notices.notify(`Request failed: ${error.message}`);
      } else {
        this.notices.notify(`Unexpected error: ${String(error)}`);
      }
      return null;
    }
  }

  async refreshAll(): Promise<void> {
    const listing = await this.guard(() => this.api.listResumes(), () => {});
    if (!listing) return;
    this.version = listing.version;
    this.names = new Map(listing.resumes.map((r) => [r.resume_id, r.name || r.resume_id]));
    this.renderManagePanel(listing);
    await Promise.all([
      this.renderChart(),
      this.renderHistogramPanel(),
      this.renderEgoPanel(),
      this.renderValidationPanel(),
      this.renderMobilityPanel(),
    ]);
  }

  private renderManagePanel(listing: ResumeList): void {
    const panel = this.panels.manage;
    clear(panel);
    panel.append(el("h3", {}, [`Resumes (v${listing.version})`]));
    const list = el("ul", { class: "resume-list" });
    for (const entry of listing.resumes) {
      const color = this.state.colorOf(entry.resume_id);
      const item = el(
        "li",
        {
          class: "resume-item" + (color ? " selected" : ""),
          "data-id": entry.resume_id,
        },
        [
          el("span", {
            class: "swatch",
            style: `background:${color ?? "transparent"}`,
          }),
          `${entry.name || entry.resume_id}`,
          entry.pattern_label
            ? el("span", { class: "pattern-tag" }, [` ${entry.pattern_label}`])
            : "",
        ],
      );
      item.addEventListener("click", () => {
        this.state.toggle(entry.resume_id);
        this.renderManagePanel(listing);
        void this.renderChart();
        void this.renderHistogramPanel();
        void this.renderDetailPanel(entry.resume_id);
      });
      item.addEventListener("contextmenu", (event) => {
        event.preventDefault();
        this.state.egoFocus = entry.resume_id;
        void this.renderEgoPanel();
      });
      list.append(item);
    }
    panel.append(list);
  }

  private async renderChart(): Promise<void> {
    const panel = this.panels.chart;
    clear(panel);
    const modeBar = el("div", { class: "mode-bar" });
    for (const mode of ["year", "age"] as const) {
      const button = el(
        "button",
        { class: "mode-button" + (this.state.timeMode === mode ? " active" : "") },
        [mode],
      );
      button.addEventListener("click", () => {
        this.state.setTimeMode(mode); // selection and colors preserved
        void this.renderChart();
      });
      modeBar.append(button);
    }
    panel.append(el("h3", {}, ["Career Trajectories"]), modeBar);

    const selected = [...this.state.selected.keys()];
    const models: TrajectoryVM[] = [];
    for (const id of selected) {
      const vm = await this.guard(
        () => this.api.trajectory(id, this.state.timeMode),
        () => void this.renderChart(),
      );
      if (vm) models.push(vm);
    }
    panel.append(
      renderTrajectoryChart(models, {
        colors: this.state.selected,
        names: this.names,
        animateReveal: true,
      }),
    );
  }

  private async renderHistogramPanel(): Promise<void> {
    const panel = this.panels.histogram;
    clear(panel);
    panel.append(el("h3", {}, ["Rank Duration Histogram"]));
    const first = [...this.state.selected.keys()][0];
    const vm = await this.guard(() => this.api.histogram(first), () => {});
    if (vm) {
      panel.append(
        renderHistogram(vm, { color: first ? this.state.colorOf(first) : undefined }),
      );
    }
  }

  private async renderEgoPanel(): Promise<void> {
    const panel = this.panels.ego;
    clear(panel);
    panel.append(el("h3", {}, ["Relationship Graph"]));
    const controls = el("div", { class: "ego-controls" });
    const kInput = el("input", {
      type: "number",
      min: 1,
      value: this.state.egoK,
      class: "ego-k",
    }) as HTMLInputElement;
    kInput.addEventListener("change", () => {
      const k = Number(kInput.value);
      if (k >= 1) {
        this.state.setEgoK(k);
        void this.renderEgoPanel();
      }
    });
    const kindSelect = el("select", { class: "ego-kind" }) as HTMLSelectElement;
    for (const kind of ["explicit", "implicit"]) {
      const option = el("option", { value: kind }, [kind]);
      if (kind === this.state.egoKind) option.setAttribute("selected", "selected");
      kindSelect.append(option);
    }
    kindSelect.addEventListener("change", () => {
      this.state.egoKind = kindSelect.value as "explicit" | "implicit";
      void this.renderEgoPanel();
    });
    controls.append("K ", kInput, " type ", kindSelect);
    panel.append(controls);

    if (!this.state.egoFocus) {
      panel.append(el("p", { class: "hint" }, ["Right-click a resume to focus it."]));
      return;
    }
    const vm = await this.guard(
      () => this.api.neighbors(this.state.egoFocus!, this.state.egoK, this.state.egoKind),
      () => void this.renderEgoPanel(),
    );
    if (vm) panel.append(renderEgoGraph(vm, { names: this.names }));
  }

  async renderDetailPanel(id: string): Promise<void> {
    const panel = this.panels.detail;
    clear(panel);
    panel.append(el("h3", {}, [`Details: ${this.names.get(id) ?? id}`]));
    const vm = await this.guard(() => this.api.getResume(id), () => {});
    if (!vm) return;
    this.version = vm.version;
    panel.append(
      renderDetailWindow(vm, {
        onRankFix: (edit) =>
          void this.guard(
            () => this.api.fixRank(id, edit, this.version),
            () => void this.renderDetailPanel(id),
          ).then((result) => {
            if (result) {
              this.version = result.version;
              void this.renderDetailPanel(id);
              void this.renderChart(); // ladder picks up the fixed rank
              void this.renderHistogramPanel();
            }
          }),
        onLabel: (pattern) =>
          void this.guard(
            () => this.api.label(id, pattern, this.version),
            () => void this.renderDetailPanel(id),
          ).then((result) => {
            if (result) void this.refreshAll();
          }),
        onRetrain: () =>
          void this.guard(() => this.api.retrain(this.version), () => {}).then(
            (result) => {
              if (result) {
                this.notices.notify("Model retrained.");
                void this.refreshAll();
              }
            },
          ),
        onBasicEdit: (field, value) =>
          void this.guard(
            () => this.api.editBasic(id, field, value || null, this.version),
            () => void this.renderDetailPanel(id),
          ).then((result) => {
            if (result) void this.refreshAll();
          }),
      }),
    );
  }

  private async renderValidationPanel(): Promise<void> {
    const panel = this.panels.validation;
    clear(panel);
    panel.append(el("h3", {}, ["Resume Validation"]));
    const input = el("textarea", {
      class: "validation-input",
      rows: 6,
      placeholder: "Paste an unknown resume text...",
    }) as HTMLTextAreaElement;
    const run = el("button", { class: "validate-button" }, ["Validate"]);
    const output = el("div", { class: "validation-output" });
    run.addEventListener("click", () =>
      void this.guard(() => this.api.validate(input.value), () => {}).then((vm) => {
        if (vm) {
          clear(output);
          output.append(renderValidationView(vm, { names: this.names }));
        }
      }),
    );
    panel.append(input, run, output);
  }

  private async renderMobilityPanel(): Promise<void> {
    const panel = this.panels.mobility;
    clear(panel);
    panel.append(el("h3", {}, ["Mobility Map"]));

    const controls = el("div", { class: "mobility-controls" });
    const slider = el("input", {
      type: "range",
      min: 1960,
      max: 2026,
      value: this.state.mobilityTimestamp.slice(0, 4),
      class: "time-slider",
    }) as HTMLInputElement;
    const yearLabel = el("span", { class: "slider-year" }, [
      this.state.mobilityTimestamp.slice(0, 4),
    ]);
    slider.addEventListener("change", () => {
      this.state.mobilityTimestamp = `${slider.value}-01-01`;
      void this.renderMobilityPanel();
    });
    const playButton = el("button", { class: "animate-button" }, [
      this.state.animating ? "Stop" : "Animation",
    ]);
    playButton.addEventListener("click", () => void this.toggleAnimation());
    controls.append("Year ", slider, yearLabel, playButton);
    panel.append(controls);

    const host = el("div", { class: "mobility-host" });
    panel.append(host);
    await this.drawMobility(host, this.state.mobilityTimestamp);
  }

  private async drawMobility(host: HTMLElement, timestamp: string): Promise<void> {
    const geometry = await this.guard(() => this.api.geometry(), () => {});
    const vm = await this.guard(() => this.api.mobility(timestamp), () => {});
    if (!geometry || !vm) return;
    clear(host);
    const draw = () => {
      clear(host);
      host.append(
        renderMobilityMap(vm, geometry, {
          selectedCommunity: this.selectedCommunity,
          selectedNode: this.selectedNode,
          onSelectCommunity: (community) => {
            this.selectedCommunity = community;
            draw();
          },
          onSelectNode: (id) => {
            this.selectedNode = id;
            draw();
          },
        }),
      );
    };
    draw();
  }

  private async toggleAnimation(): Promise<void> {
    if (this.animationTimer !== null) {
      clearInterval(this.animationTimer);
      this.animationTimer = null;
      this.state.animating = false;
      void this.renderMobilityPanel();
      return;
    }
    const year = Number(this.state.mobilityTimestamp.slice(0, 4));
    const animation = await this.guard(
      () => this.api.animate(`${year}-01-01`, `${year + 20}-01-01`, 10),
      () => {},
    );
    const geometry = await this.guard(() => this.api.geometry(), () => {});
    if (!animation || !geometry) return;
    this.state.animating = true;
    const host = this.panels.mobility.querySelector(".mobility-host") as HTMLElement;
    let step = 0;
    let fraction = 0;
    this.animationTimer = setInterval(() => {
      const current = animation.snapshots[step];
      const next = animation.snapshots[Math.min(step + 1, animation.snapshots.length - 1)];
      const frame = interpolateSnapshots(current, next, fraction);
      clear(host);
      host.append(renderMobilityMap(frame, geometry, {}));
      fraction += 0.25;
      if (fraction > 1) {
        fraction = 0;
        step += 1;
        if (step >= animation.snapshots.length - 1) {
          clearInterval(this.animationTimer as number);
          this.animationTimer = null;
          this.state.animating = false;
        }
      }
    }, 120) as unknown as number;
  }
}

export function mount(baseUrl = ""): Workbench {
  const root = document.getElementById("app") ?? document.body;
  const workbench = new Workbench(new ApiClient(baseUrl), root as HTMLElement);
  void workbench.start();
  return workbench;
}
