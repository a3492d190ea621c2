/*
 * Typed client for the game service. Every integer on the wire is a
 * decimal string and stays a string here: follow-up questions carry
 * 20+-digit entries that JSON numbers would silently corrupt.
 */

export interface SessionSummary {
  id: string;
  n: string;
  status: string;
}

export interface TranscriptRow {
  question: string[];
  response: string;
  candidate_count: string;
  truncated: boolean;
}

export interface SessionView {
  n: string;
  status: string;
  guesses_used: string;
  transcript: TranscriptRow[];
  secret?: string[];
}

export interface AskResult {
  response: string;
  candidate_count: string;
  truncated: boolean;
}

export interface GuessResult {
  correct: boolean;
  status: string;
  guesses_used: string;
}

export interface RevealResult {
  secret: string[];
  status: string;
}

export interface HintResult {
  question: string[];
}

export interface LabEvidenceRow {
  outer: string[];
  inner: string[] | null;
}

export interface LabReport {
  statement: "exists_forall" | "forall_exists";
  universe: { n: string; q_max: string; s_max: string };
  verdict: boolean;
  evidence: LabEvidenceRow[];
  unbounded_note: string;
}

export interface DemoStep {
  question: string[];
  response: string;
  note: string;
}

export interface DemoDoc {
  strategy: string;
  n: string;
  secret: string[];
  steps: DemoStep[];
  construction: Record<string, string | string[]>;
  recovered: string[];
  questions_used: string;
  match: boolean;
}

export class ApiError extends Error {
  constructor(
    public readonly code: string,
    message: string,
    public readonly status: number,
  ) {
    super(message);
  }
}

type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

export class GameApi {
  constructor(
    private readonly baseUrl: string = "",
    private readonly fetchFn: FetchLike = (input, init) => fetch(input, init),
  ) {}

  private async call<T>(method: string, path: string, body?: unknown): Promise<T> {
    const init: RequestInit = { method };
    if (body !== undefined) {
      init.headers = { "Content-Type": "application/json" };
      init.body = JSON.stringify(body);
    }
    const response = await this.fetchFn(this.baseUrl + path, init);
    const payload = await response.json();
    if (!response.ok) {
      throw new ApiError(
        payload.error_code ?? "Unknown",
        payload.message ?? `request failed with status ${response.status}`,
        response.status,
      );
    }
    return payload as T;
  }

  createSession(options: { n: string; seed?: string; maxEntry?: string }): Promise<SessionSummary> {
    const body: Record<string, string> = { n: options.n };
    if (options.seed !== undefined && options.seed !== "") body.seed = options.seed;
    if (options.maxEntry !== undefined && options.maxEntry !== "") body.max_entry = options.maxEntry;
    return this.call("POST", "/sessions", body);
  }

  getSession(id: string): Promise<SessionView> {
    return this.call("GET", `/sessions/${id}`);
  }

  ask(id: string, question: string[]): Promise<AskResult> {
    return this.call("POST", `/sessions/${id}/ask`, { question });
  }

  guess(id: string, secret: string[]): Promise<GuessResult> {
    return this.call("POST", `/sessions/${id}/guess`, { secret });
  }

  reveal(id: string): Promise<RevealResult> {
    return this.call("POST", `/sessions/${id}/reveal`, {});
  }

  hint(id: string, strategy: "nonadaptive" | "followup"): Promise<HintResult> {
    return this.call("GET", `/sessions/${id}/hint?strategy=${strategy}`);
  }

  runLab(body: { statement: string; n: string; q_max?: string; s_max: string }): Promise<LabReport> {
    return this.call("POST", "/lab", body);
  }

  runDemo(body: {
    strategy: string;
    n: string;
    seed?: string;
    secret?: string[];
    max_entry?: string;
  }): Promise<DemoDoc> {
    return this.call("POST", "/demo", body);
  }
}
