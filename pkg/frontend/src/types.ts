import { z } from "zod";

// Payload schemas for the draft service API (see ../docs/api.md). Parsed at
// the fetch boundary so everything the UI renders is service-validated data.

export const Axes = [
  "TraditionalLow",
  "TraditionalHigh",
  "Technical",
  "Autonomous",
  "Endgame",
  "Fouls",
  "Defense",
] as const;

const vector7 = z.array(z.number()).length(7);

export const AllianceViewSchema = z.object({
  seat: z.number().int(),
  captain: z.string(),
  partners: z.array(z.string()),
});

export const PickEventSchema = z.object({
  pick_number: z.number().int(),
  picking_captain: z.string(),
  picked: z.string(),
  promotions: z.array(z.tuple([z.string(), z.number().int(), z.number().int()])),
});

export const SessionStateSchema = z.object({
  ranking: z.array(z.string()),
  alliances: z.array(AllianceViewSchema),
  pool: z.array(z.string()),
  picks: z.array(PickEventSchema),
  complete: z.boolean(),
  current_picker: z.string().nullable(),
  eligible: z.array(z.string()),
  mode: z.string(),
  our_team: z.string().nullable().optional(),
});

export const SessionResponseSchema = z.object({
  session_id: z.string(),
  revision: z.number().int(),
  state: SessionStateSchema,
});

export const PickResponseSchema = SessionResponseSchema.extend({
  event: PickEventSchema,
});

export const RadarDataSchema = z.object({
  axes: z.array(z.string()).length(7),
  current: vector7,
  with_candidate: vector7,
});

export const SuggestionCardSchema = z.object({
  team: z.string(),
  area: z.number(),
  win_probability: z.number().nullable(),
  radar: RadarDataSchema,
});

export const SuggestionsResponseSchema = z.object({
  session_id: z.string(),
  revision: z.number().int(),
  picker: z.string().nullable(),
  current_area: z.number(),
  cards: z.array(SuggestionCardSchema),
});

export const RankingsResponseSchema = z.object({
  ranking: z.array(z.string()),
  captains: z.array(z.string()),
});

export const ProfileResponseSchema = z.object({
  team_id: z.string(),
  match_count: z.number().int(),
  axes: z.array(z.string()).length(7),
  raw_means: vector7,
  normalized: vector7,
  radar_area: z.number(),
});

export const PredictResponseSchema = z.object({
  probability: z.number(),
  red_wins: z.boolean(),
});

export type AllianceView = z.infer<typeof AllianceViewSchema>;
export type PickEvent = z.infer<typeof PickEventSchema>;
export type SessionState = z.infer<typeof SessionStateSchema>;
export type SessionResponse = z.infer<typeof SessionResponseSchema>;
export type PickResponse = z.infer<typeof PickResponseSchema>;
export type RadarData = z.infer<typeof RadarDataSchema>;
export type SuggestionCard = z.infer<typeof SuggestionCardSchema>;
export type SuggestionsResponse = z.infer<typeof SuggestionsResponseSchema>;
export type RankingsResponse = z.infer<typeof RankingsResponseSchema>;
export type ProfileResponse = z.infer<typeof ProfileResponseSchema>;
export type PredictResponse = z.infer<typeof PredictResponseSchema>;
