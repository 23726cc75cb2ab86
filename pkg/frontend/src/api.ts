// Typed client over the engine's HTTP facade. Every number the UI shows
// comes out of these payloads; the client adds in-flight de-duplication for
// GETs so a panel re-querying mid-flight reuses the pending response.

export interface TrajectorySegment {
  x_begin: number;
  x_end: number;
  rank: number;
  location: string;
  org: string;
  title: string;
}

export interface TrajectoryVM {
  version: number;
  resume_id: string;
  mode: "year" | "age";
  segments: TrajectorySegment[];
  pattern: string | null;
}

export interface ResumeListEntry {
  resume_id: string;
  name: string;
  pattern_label: string | null;
  label_source: string | null;
}

export interface ResumeList {
  version: number;
  total: number;
  resumes: ResumeListEntry[];
}

export interface TitleDoc {
  title_name: string;
  rank: number | null;
  rank_source?: string;
}

export interface OrganizationDoc {
  organization_name: string;
  titles: TitleDoc[];
}

export interface ExperienceDoc {
  date_begin: string;
  date_end: string;
  location: { province: string | null; city: string | null };
  organizations: OrganizationDoc[];
}

export interface ResumeDoc {
  resume_id: string;
  basic_info: {
    name: string;
    gender: string;
    nation: string | null;
    birth_place: string | null;
    date_birth: string | null;
    date_work: string | null;
    date_party: string | null;
  };
  experience: ExperienceDoc[];
  pattern_label?: string;
  label_source?: string;
}

export interface ResumeDetailVM {
  version: number;
  resume: ResumeDoc;
  raw_text: string | null;
  warnings: string[];
}

export interface NeighborEvidence {
  org: string;
  overlap_begin: string;
  overlap_end: string;
}

export interface NeighborVM {
  id: string;
  value: number;
  kind: string;
  evidence: NeighborEvidence[];
}

export interface EgoVM {
  version: number;
  focus: string;
  k: number;
  kind: string;
  neighbors: NeighborVM[];
}

export interface HistogramVM {
  version: number;
  mean_years: number[];
  count: number;
  mean_growth_rate: number;
  individual: { resume_id: string; t: number[] } | null;
}

export interface MismatchVM {
  path: string;
  test_value: string | null;
  standard_value: string | null;
}

export interface ValidationVM {
  version: number;
  best: string;
  degree: number;
  percent: number;
  confident: boolean;
  candidates: { resume_id: string; degree: number }[];
  mismatches: MismatchVM[];
}

export interface MobilityNodeVM {
  id: string;
  community: string;
  rank: number;
  x: number;
  y: number;
  links: string[];
}

export interface MobilityEventVM {
  id: string;
  form: "appointment" | "dismissing";
  detail: string;
}

export interface MobilityVM {
  version?: number;
  timestamp: string;
  nodes: MobilityNodeVM[];
  events: MobilityEventVM[];
}

export interface MobilityAnimationVM {
  version: number;
  snapshots: MobilityVM[];
}

export interface GeometryVM {
  disk_radius: number;
  outer_radius: number;
  node_unit: number;
  sector_order: string[];
}

export interface MutationResult {
  version: number;
}

export class ApiError extends Error {
  constructor(public status: number, detail: string) {
    super(detail);
    this.name = "ApiError";
  }
}

async function toError(res: Response): Promise<ApiError> {
  let detail = `${res.status} ${res.statusText}`;
  try {
    const body = await res.json();
    if (body && typeof body.detail === "string") detail = body.detail;
  } catch {
    // body was not JSON; keep the status line
  }
  return new ApiError(res.status, detail);
}

export class ApiClient {
  private inflight = new Map<string, Promise<unknown>>();

  constructor(public baseUrl: string = "") {}

  private async requestJson<T>(path: string, init?: RequestInit): Promise<T> {
    const res = await fetch(this.baseUrl + path, init);
    if (!res.ok) throw await toError(res);
    return (await res.json()) as T;
  }

  get<T>(path: string): Promise<T> {
    const pending = this.inflight.get(path);
    if (pending) return pending as Promise<T>;
    const promise = this.requestJson<T>(path).finally(() =>
      this.inflight.delete(path),
    );
    this.inflight.set(path, promise);
    return promise;
  }

  post<T>(path: string, body: unknown): Promise<T> {
    return this.requestJson<T>(path, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(body),
    });
  }

  listResumes(): Promise<ResumeList> {
    return this.get("/resumes");
  }

  getResume(id: string): Promise<ResumeDetailVM> {
    return this.get(`/resumes/${encodeURIComponent(id)}`);
  }

  trajectory(id: string, mode: "year" | "age"): Promise<TrajectoryVM> {
    return this.get(`/resumes/${encodeURIComponent(id)}/trajectory?mode=${mode}`);
  }

  histogram(id?: string): Promise<HistogramVM> {
    const query = id ? `?id=${encodeURIComponent(id)}` : "";
    return this.get(`/histogram${query}`);
  }

  neighbors(id: string, k: number, kind: string): Promise<EgoVM> {
    return this.get(
      `/resumes/${encodeURIComponent(id)}/neighbors?k=${k}&kind=${kind}`,
    );
  }

  label(id: string, pattern: string, version?: number): Promise<MutationResult> {
    return this.post(`/resumes/${encodeURIComponent(id)}/label`, {
      pattern,
      version,
    });
  }

  fixRank(
    id: string,
    edit: { record_index: number; org_index: number; title_index: number; rank: number },
    version?: number,
  ): Promise<MutationResult> {
    return this.post(`/resumes/${encodeURIComponent(id)}/rank`, {
      ...edit,
      version,
    });
  }

  editBasic(
    id: string,
    field: string,
    value: string | null,
    version?: number,
  ): Promise<MutationResult> {
    return this.post(`/resumes/${encodeURIComponent(id)}/basic`, {
      field,
      value,
      version,
    });
  }

  retrain(version?: number): Promise<MutationResult & { model: unknown }> {
    return this.post("/retrain", { version });
  }

  validate(text: string): Promise<ValidationVM> {
    return this.post("/validate", { text });
  }

  mobility(t: string): Promise<MobilityVM> {
    return this.get(`/mobility?t=${encodeURIComponent(t)}`);
  }

  animate(from: string, to: string, steps: number): Promise<MobilityAnimationVM> {
    return this.get(
      `/mobility/animate?from=${encodeURIComponent(from)}&to=${encodeURIComponent(to)}&steps=${steps}`,
    );
  }

  geometry(): Promise<GeometryVM> {
    return this.get("/geometry");
  }
}
