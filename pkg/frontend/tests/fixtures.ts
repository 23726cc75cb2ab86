// Shared payload fixtures mirroring the engine's wire formats.

import type {
  EgoVM,
  GeometryVM,
  HistogramVM,
  MobilityVM,
  ResumeDetailVM,
  TrajectoryVM,
  ValidationVM,
} from "../src/api.js";

// the six-record ladder career (secretary 0 -> governor 6), year mode
export const LADDER_TRAJECTORY: TrajectoryVM = {
  version: 1,
  resume_id: "jim",
  mode: "year",
  segments: [
    { x_begin: 1989.0, x_end: 1992.0, rank: 0, location: "Ningxiang, Hunan", org: "Party Branch of Health Bureau", title: "Secretary" },
    { x_begin: 1992.0, x_end: 1995.0, rank: 2, location: "Ningxiang, Hunan", org: "County Party Committee", title: "County head" },
    { x_begin: 1995.0, x_end: 1998.0, rank: 3, location: "Changsha, Hunan", org: "Municipal Party Committee", title: "Vice mayor" },
    { x_begin: 1998.0, x_end: 2002.0, rank: 4, location: "Changsha, Hunan", org: "Municipal Party Committee", title: "Mayor" },
    { x_begin: 2002.0, x_end: 2010.0, rank: 5, location: "Hunan", org: "Provincial Party Committee", title: "Vice governor" },
    { x_begin: 2010.0, x_end: 2015.9, rank: 6, location: "Hunan", org: "Provincial Party Committee", title: "Governor" },
  ],
  pattern: "ascending",
};

export const DETAIL: ResumeDetailVM = {
  version: 1,
  resume: {
    resume_id: "jim",
    basic_info: {
      name: "Jim",
      gender: "male",
      nation: "Han",
      birth_place: "Changsha city, Hunan province",
      date_birth: "1975-08-02",
      date_work: "1990-01-01",
      date_party: "1991-12-01",
    },
    experience: [
      {
        date_begin: "1989-01-01",
        date_end: "1992-01-01",
        location: { province: "Hunan", city: "Ningxiang" },
        organizations: [
          {
            organization_name: "Party Branch of Health Bureau",
            titles: [{ title_name: "Secretary", rank: 0, rank_source: "rule" }],
          },
        ],
      },
      {
        date_begin: "1992-01-01",
        date_end: "1995-01-01",
        location: { province: "Hunan", city: "Ningxiang" },
        organizations: [
          {
            organization_name: "County Party Committee",
            titles: [{ title_name: "County head", rank: 2, rank_source: "rule" }],
          },
        ],
      },
    ],
  },
  raw_text: "Jim; male; ethnic Han ...",
  warnings: [],
};

export const VALIDATION: ValidationVM = {
  version: 1,
  best: "jim",
  degree: 0.72,
  percent: 72,
  confident: true,
  candidates: [
    { resume_id: "jim", degree: 0.72 },
    { resume_id: "ada", degree: 0.31 },
    { resume_id: "bo", degree: 0.05 },
  ],
  mismatches: [
    { path: "experience[1].organizations[0].titles", test_value: "Impostor", standard_value: "County head" },
    { path: "experience[3]", test_value: null, standard_value: "1998-01-01..2002-01-01 Municipal Party Committee" },
    { path: "basic_info.gender", test_value: "female", standard_value: "male" },
  ],
};

export const EGO: EgoVM = {
  version: 1,
  focus: "jim",
  k: 3,
  kind: "explicit",
  neighbors: [
    { id: "ada", value: 0.8, kind: "explicit", evidence: [{ org: "joint bureau", overlap_begin: "1994-01-01", overlap_end: "1999-01-01" }] },
    { id: "bo", value: 0.5, kind: "explicit", evidence: [{ org: "joint bureau", overlap_begin: "1994-01-01", overlap_end: "1996-06-01" }] },
    { id: "cai", value: 0.1, kind: "explicit", evidence: [{ org: "trade committee", overlap_begin: "2001-01-01", overlap_end: "2002-01-01" }] },
  ],
};

export const HISTOGRAM: HistogramVM = {
  version: 1,
  mean_years: [8.2, 1.1, 2.4, 2.0, 3.1, 4.4, 2.2, 0.4, 0.1],
  count: 7,
  mean_growth_rate: 0.18,
  individual: { resume_id: "jim", t: [3, 0, 3, 3, 4, 8, 5.9, 0, 0] },
};

export const GEOMETRY: GeometryVM = {
  disk_radius: 120,
  outer_radius: 480,
  node_unit: 1.5,
  sector_order: ["government", "grass_roots", "state_owned_enterprise", "non_profit"],
};

export const MOBILITY: MobilityVM = {
  version: 1,
  timestamp: "2000-06-01",
  nodes: [
    { id: "jim", community: "government", rank: 4, x: 220.0, y: 210.0, links: [] },
    { id: "ada", community: "state_owned_enterprise", rank: 2, x: -250.0, y: -40.0, links: [] },
    { id: "bo", community: "compound", rank: 6, x: 30.0, y: 40.0, links: ["government", "non_profit"] },
  ],
  events: [{ id: "jim", form: "appointment", detail: "Mayor of Municipal Party Committee" }],
};
