import { z } from "zod";
import {
  PickResponse,
  PickResponseSchema,
  PredictResponse,
  PredictResponseSchema,
  ProfileResponse,
  ProfileResponseSchema,
  RankingsResponse,
  RankingsResponseSchema,
  SessionResponse,
  SessionResponseSchema,
  SuggestionsResponse,
  SuggestionsResponseSchema,
} from "./types.js";

export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly detail: string,
  ) {
    super(`HTTP ${status}: ${detail}`);
  }
}

/** 409 from the service: stale revision, ineligible pick, or finished draft. */
export class ConflictError extends ApiError {
  constructor(detail: string) {
    super(409, detail);
  }
}

async function parseBody<T>(res: Response, schema: z.ZodType<T>): Promise<T> {
  if (!res.ok) {
    let detail = res.statusText;
    try {
      const body = (await res.json()) as { detail?: unknown };
      if (typeof body.detail === "string") detail = body.detail;
    } catch {
      // non-JSON error body; keep the status text
    }
    if (res.status === 409) throw new ConflictError(detail);
    throw new ApiError(res.status, detail);
  }
  return schema.parse(await res.json());
}

export class DraftApi {
  constructor(readonly baseUrl: string) {}

  private url(path: string): string {
    return this.baseUrl.replace(/\/$/, "") + path;
  }

  async rankings(): Promise<RankingsResponse> {
    return parseBody(await fetch(this.url("/rankings")), RankingsResponseSchema);
  }

  async profile(team: string): Promise<ProfileResponse> {
    return parseBody(
      await fetch(this.url(`/profiles/${encodeURIComponent(team)}`)),
      ProfileResponseSchema,
    );
  }

  async createSession(
    mode = "manual",
    ourTeam?: string,
    ranking?: string[],
  ): Promise<SessionResponse> {
    const res = await fetch(this.url("/sessions"), {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify({ mode, our_team: ourTeam ?? null, ranking: ranking ?? null }),
    });
    return parseBody(res, SessionResponseSchema);
  }

  async session(id: string): Promise<SessionResponse> {
    return parseBody(
      await fetch(this.url(`/sessions/${encodeURIComponent(id)}`)),
      SessionResponseSchema,
    );
  }

  async pick(id: string, picked: string, revision: number): Promise<PickResponse> {
    const res = await fetch(this.url(`/sessions/${encodeURIComponent(id)}/picks`), {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify({ picked, revision }),
    });
    return parseBody(res, PickResponseSchema);
  }

  async suggestions(id: string, k = 3): Promise<SuggestionsResponse> {
    return parseBody(
      await fetch(this.url(`/sessions/${encodeURIComponent(id)}/suggestions?k=${k}`)),
      SuggestionsResponseSchema,
    );
  }

  async predict(red: string[], blue: string[]): Promise<PredictResponse> {
    const res = await fetch(this.url("/predict"), {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify({ red_teams: red, blue_teams: blue }),
    });
    return parseBody(res, PredictResponseSchema);
  }
}
