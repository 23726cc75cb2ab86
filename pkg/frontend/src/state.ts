// Workbench view state: which resumes are selected (each with a stable,
// unique color), the time mode, ego-graph controls and the mobility clock.
// Mode switches must never touch the selection or its colors.

export type TimeMode = "year" | "age";
export type RelationKind = "explicit" | "implicit";

export const PALETTE = [
  "#1f77b4",
  "#ff7f0e",
  "#2ca02c",
  "#d62728",
  "#9467bd",
  "#8c564b",
  "#e377c2",
  "#7f7f7f",
  "#bcbd22",
  "#17becf",
];

export class ViewState {
  private colors = new Map<string, string>();
  timeMode: TimeMode = "year";
  egoK = 5;
  egoKind: RelationKind = "explicit";
  egoFocus: string | null = null;
  mobilityTimestamp = "2000-01-01";
  animating = false;
  activePanel = "trajectory";

  get selected(): Map<string, string> {
    return new Map(this.colors);
  }

  isSelected(id: string): boolean {
    return this.colors.has(id);
  }

  colorOf(id: string): string | undefined {
    return this.colors.get(id);
  }

  select(id: string): string {
    const existing = this.colors.get(id);
    if (existing) return existing;
    const used = new Set(this.colors.values());
    const free = PALETTE.find((c) => !used.has(c));
    const color = free ?? this.fallbackColor(this.colors.size);
    this.colors.set(id, color);
    return color;
  }

  deselect(id: string): void {
    this.colors.delete(id);
  }

  toggle(id: string): boolean {
    if (this.isSelected(id)) {
      this.deselect(id);
      return false;
    }
    this.select(id);
    return true;
  }

  setTimeMode(mode: TimeMode): void {
    this.timeMode = mode; // selection and colors intentionally untouched
  }

  setEgoK(k: number): void {
    if (k < 1) throw new Error("K must be >= 1");
    this.egoK = Math.floor(k);
  }

  private fallbackColor(index: number): string {
    const hue = (index * 137.508) % 360;
    return `hsl(${hue.toFixed(1)}, 60%, 45%)`;
  }
}
