/*
 * Single-page client: play against a hidden secret, step through a
 * machine-vs-machine walkthrough, or browse quantifier-lab reports.
 * The app never sees an open session's secret; everything it shows is a
 * service response. Requests for one view are serialized (one in flight).
 */

import { ApiError, GameApi } from "./api.js";
import type { DemoDoc, LabReport, SessionView } from "./api.js";
import {
  candidatePhrase,
  escapeHtml,
  formatVector,
  labColumnLabels,
  parseEntries,
  renderLabRows,
  renderTranscriptRows,
} from "./format.js";

type BannerKind = "info" | "win" | "error";

interface PlayState {
  sessionId: string | null;
  n: number;
  view: SessionView | null;
  banner: string;
  bannerKind: BannerKind;
}

interface WalkthroughState {
  doc: DemoDoc | null;
  revealed: number;
}

const SCAFFOLD = `
<h1>Secret Sequences</h1>
<p class="tagline">Guess a hidden sequence of positive integers; every question is answered
with the scalar product.</p>
<nav>
  <button id="tab-play" class="tab active">Play</button>
  <button id="tab-walkthrough" class="tab">Walkthrough</button>
  <button id="tab-lab" class="tab">Quantifier lab</button>
</nav>

<section id="panel-play">
  <form id="new-game-form">
    <label>dimension <input id="new-n" value="4" size="3"></label>
    <label>seed (optional) <input id="new-seed" size="10"></label>
    <label>max entry <input id="new-max-entry" value="9" size="4"></label>
    <button id="btn-new-game" type="submit">New game</button>
  </form>
  <div id="status-banner" class="banner info"></div>
  <div id="play-area" hidden>
    <table id="transcript">
      <thead><tr><th>#</th><th>question</th><th>response</th><th>candidates</th></tr></thead>
      <tbody></tbody>
    </table>
    <div class="entry-row">
      <input id="ask-input" placeholder="e.g. 1 5 10 20">
      <button id="btn-ask">Ask</button>
      <button id="btn-hint-nonadaptive" type="button">Hint: scan</button>
      <button id="btn-hint-followup" type="button">Hint: follow-up</button>
    </div>
    <div class="entry-row">
      <input id="guess-input" placeholder="your guess">
      <button id="btn-guess">Guess</button>
      <button id="btn-reveal" type="button">Reveal</button>
      <span id="guess-counter"></span>
    </div>
  </div>
</section>

<section id="panel-walkthrough" hidden>
  <form id="walkthrough-form">
    <label>strategy
      <select id="wt-strategy">
        <option value="nonadaptive">nonadaptive (n questions)</option>
        <option value="adaptive">adaptive (2 questions)</option>
        <option value="onekey">one key (1 question)</option>
      </select>
    </label>
    <label>dimension <input id="wt-n" value="4" size="3"></label>
    <label>seed <input id="wt-seed" value="1" size="10"></label>
    <label>max entry <input id="wt-max-entry" value="9" size="4"></label>
    <button id="btn-wt-run" type="submit">Start</button>
  </form>
  <div id="wt-banner" class="banner info"></div>
  <ol id="wt-steps"></ol>
  <button id="btn-wt-next" hidden>Next step</button>
  <div id="wt-summary"></div>
</section>

<section id="panel-lab" hidden>
  <form id="lab-form">
    <label>statement
      <select id="lab-statement">
        <option value="exists_forall">&#8707;q &#8704;s : one master question</option>
        <option value="forall_exists">&#8704;s &#8707;q : no unbreakable secret</option>
      </select>
    </label>
    <label>dimension <input id="lab-n" value="4" size="3"></label>
    <label>q max <input id="lab-qmax" value="3" size="4"></label>
    <label>s max <input id="lab-smax" value="4" size="4"></label>
    <button id="btn-lab-run" type="submit">Evaluate</button>
  </form>
  <div id="lab-verdict" class="banner info"></div>
  <div id="lab-note"></div>
  <table id="lab-table">
    <thead><tr><th id="lab-col-outer"></th><th id="lab-col-inner"></th></tr></thead>
    <tbody></tbody>
  </table>
</section>
`;

export class App {
  readonly play: PlayState = {
    sessionId: null,
    n: 4,
    view: null,
    banner: "Start a new game to play.",
    bannerKind: "info",
  };
  readonly walkthrough: WalkthroughState = { doc: null, revealed: 0 };
  lab: LabReport | null = null;

  private root!: HTMLElement;
  private pending: Promise<unknown> = Promise.resolve();

  constructor(private readonly api: GameApi) {}

  /** Build the UI inside the given element and attach all handlers. */
  mount(root: HTMLElement): void {
    this.root = root;
    root.innerHTML = SCAFFOLD;
    this.wireTabs();
    this.on("new-game-form", "submit", () => this.createGame());
    this.on("btn-ask", "click", () => this.ask());
    this.on("btn-guess", "click", () => this.guess());
    this.on("btn-reveal", "click", () => this.reveal());
    this.on("btn-hint-nonadaptive", "click", () => this.hint("nonadaptive"));
    this.on("btn-hint-followup", "click", () => this.hint("followup"));
    this.on("walkthrough-form", "submit", () => this.startWalkthrough());
    this.on("btn-wt-next", "click", () => this.advanceWalkthrough());
    this.on("lab-form", "submit", () => this.runLab());
    this.renderPlay();
  }

  /** Resolves once every queued request has settled; tests await this. */
  whenIdle(): Promise<unknown> {
    return this.pending;
  }

  private element<T extends HTMLElement>(id: string): T {
    const found = this.root.querySelector(`#${id}`);
    if (!found) throw new Error(`missing element #${id}`);
    return found as T;
  }

  private value(id: string): string {
    return this.element<HTMLInputElement>(id).value.trim();
  }

  private on(id: string, event: string, handler: () => void): void {
    this.element(id).addEventListener(event, (e) => {
      e.preventDefault();
      this.enqueue(handler);
    });
  }

  /** Serialize handlers: a view never has two requests in flight. */
  private enqueue(handler: () => void | Promise<void>): Promise<unknown> {
    this.pending = this.pending.then(async () => {
      try {
        await handler();
      } catch (error) {
        this.showError(error);
      }
    });
    return this.pending;
  }

  private showError(error: unknown): void {
    const message = error instanceof ApiError ? `${error.code}: ${error.message}` : String(error);
    this.play.banner = message;
    this.play.bannerKind = "error";
    this.renderPlay();
  }

  private wireTabs(): void {
    const tabs: Array<[string, string]> = [
      ["tab-play", "panel-play"],
      ["tab-walkthrough", "panel-walkthrough"],
      ["tab-lab", "panel-lab"],
    ];
    for (const [tabId, panelId] of tabs) {
      this.element(tabId).addEventListener("click", () => {
        for (const [otherTab, otherPanel] of tabs) {
          this.element(otherTab).classList.toggle("active", otherTab === tabId);
          (this.element(otherPanel) as HTMLElement).hidden = otherPanel !== panelId;
        }
      });
    }
  }

  // ---- play ----

  async createGame(): Promise<void> {
    const n = this.value("new-n");
    const summary = await this.api.createSession({
      n,
      seed: this.value("new-seed") || undefined,
      maxEntry: this.value("new-max-entry") || undefined,
    });
    this.play.sessionId = summary.id;
    this.play.n = parseInt(n, 10);
    this.play.view = await this.api.getSession(summary.id);
    this.play.banner = `Game ${summary.id}: ask questions to pin down the secret.`;
    this.play.bannerKind = "info";
    this.renderPlay();
  }

  async ask(): Promise<void> {
    if (!this.play.sessionId) return;
    const parsed = parseEntries(this.value("ask-input"), this.play.n);
    if ("error" in parsed) {
      this.play.banner = parsed.error;
      this.play.bannerKind = "error";
      this.renderPlay();
      return;
    }
    const result = await this.api.ask(this.play.sessionId, parsed.entries);
    this.play.view = await this.api.getSession(this.play.sessionId);
    this.play.banner = `Response ${result.response} — ${candidatePhrase(result.candidate_count, result.truncated)}`;
    this.play.bannerKind = "info";
    this.element<HTMLInputElement>("ask-input").value = "";
    this.renderPlay();
  }

  async guess(): Promise<void> {
    if (!this.play.sessionId) return;
    const parsed = parseEntries(this.value("guess-input"), this.play.n);
    if ("error" in parsed) {
      this.play.banner = parsed.error;
      this.play.bannerKind = "error";
      this.renderPlay();
      return;
    }
    const result = await this.api.guess(this.play.sessionId, parsed.entries);
    this.play.view = await this.api.getSession(this.play.sessionId);
    if (result.correct) {
      this.play.banner = `You won! The secret was ${formatVector(this.play.view.secret ?? [])}.`;
      this.play.bannerKind = "win";
    } else {
      this.play.banner = "Not it — keep narrowing the candidates.";
      this.play.bannerKind = "error";
    }
    this.renderPlay();
  }

  async reveal(): Promise<void> {
    if (!this.play.sessionId) return;
    const result = await this.api.reveal(this.play.sessionId);
    this.play.view = await this.api.getSession(this.play.sessionId);
    this.play.banner = `The secret was ${formatVector(result.secret)}.`;
    this.play.bannerKind = "info";
    this.renderPlay();
  }

  async hint(strategy: "nonadaptive" | "followup"): Promise<void> {
    if (!this.play.sessionId) return;
    const result = await this.api.hint(this.play.sessionId, strategy);
    this.element<HTMLInputElement>("ask-input").value = result.question.join(" ");
    this.play.banner = `Suggested question filled in (${strategy}).`;
    this.play.bannerKind = "info";
    this.renderPlay();
  }

  renderPlay(): void {
    const banner = this.element("status-banner");
    banner.textContent = this.play.banner;
    banner.className = `banner ${this.play.bannerKind}`;
    const area = this.element("play-area") as HTMLElement;
    area.hidden = this.play.view === null;
    if (!this.play.view) return;
    const body = this.element("transcript").querySelector("tbody")!;
    body.innerHTML = renderTranscriptRows(this.play.view.transcript);
    const open = this.play.view.status === "open";
    this.element<HTMLButtonElement>("btn-ask").disabled = !open;
    this.element<HTMLButtonElement>("btn-guess").disabled = !open;
    this.element<HTMLButtonElement>("btn-reveal").disabled = !open;
    this.element("guess-counter").textContent = `wrong guesses: ${this.play.view.guesses_used}`;
  }

  // ---- walkthrough ----

  async startWalkthrough(): Promise<void> {
    const doc = await this.api.runDemo({
      strategy: this.element<HTMLSelectElement>("wt-strategy").value,
      n: this.value("wt-n"),
      seed: this.value("wt-seed"),
      max_entry: this.value("wt-max-entry"),
    });
    this.walkthrough.doc = doc;
    this.walkthrough.revealed = 0;
    this.renderWalkthrough();
  }

  advanceWalkthrough(): void {
    if (!this.walkthrough.doc) return;
    if (this.walkthrough.revealed < this.walkthrough.doc.steps.length) {
      this.walkthrough.revealed += 1;
    }
    this.renderWalkthrough();
  }

  renderWalkthrough(): void {
    const { doc, revealed } = this.walkthrough;
    const banner = this.element("wt-banner");
    const steps = this.element("wt-steps");
    const next = this.element<HTMLButtonElement>("btn-wt-next");
    const summary = this.element("wt-summary");
    if (!doc) {
      banner.textContent = "Pick a strategy and start.";
      steps.innerHTML = "";
      next.hidden = true;
      summary.innerHTML = "";
      return;
    }
    banner.textContent =
      `${doc.strategy}: the machine plays both sides against secret ` +
      `${formatVector(doc.secret)} (${doc.steps.length} question${doc.steps.length === 1 ? "" : "s"}).`;
    steps.innerHTML = doc.steps
      .slice(0, revealed)
      .map(
        (step) => `<li><span class="num">${escapeHtml(formatVector(step.question))}</span>
 &rarr; <strong class="num">${escapeHtml(step.response)}</strong><br>
 <em>${escapeHtml(step.note)}</em></li>`,
      )
      .join("\n");
    const finished = revealed >= doc.steps.length;
    next.hidden = finished;
    if (finished) {
      const construction = Object.entries(doc.construction)
        .map(([key, value]) =>
          Array.isArray(value) ? `${key} = ${formatVector(value)}` : `${key} = ${value}`,
        )
        .join("; ");
      summary.innerHTML = `<div class="banner ${doc.match ? "win" : "error"}">
 recovered ${escapeHtml(formatVector(doc.recovered))} in ${escapeHtml(doc.questions_used)}
 question(s) — ${doc.match ? "matches the secret" : "MISMATCH"}</div>
 <p>${escapeHtml(construction)}</p>`;
    } else {
      summary.innerHTML = "";
    }
  }

  // ---- lab ----

  async runLab(): Promise<void> {
    const statement = this.element<HTMLSelectElement>("lab-statement").value;
    const body: { statement: string; n: string; q_max?: string; s_max: string } = {
      statement,
      n: this.value("lab-n"),
      s_max: this.value("lab-smax"),
    };
    const qMax = this.value("lab-qmax");
    if (qMax !== "") body.q_max = qMax;
    this.lab = await this.api.runLab(body);
    this.renderLab();
  }

  renderLab(): void {
    const verdict = this.element("lab-verdict");
    const note = this.element("lab-note");
    const table = this.element("lab-table");
    if (!this.lab) {
      verdict.textContent = "";
      return;
    }
    const symbol = this.lab.statement === "exists_forall" ? "∃q ∀s" : "∀s ∃q";
    verdict.textContent = `${symbol} : ${this.lab.verdict ? "TRUE" : "FALSE"}`;
    verdict.className = `banner ${this.lab.verdict ? "win" : "error"}`;
    note.textContent = this.lab.unbounded_note;
    const [outerLabel, innerLabel] = labColumnLabels(this.lab.statement);
    this.element("lab-col-outer").textContent = outerLabel;
    this.element("lab-col-inner").textContent = innerLabel;
    table.querySelector("tbody")!.innerHTML = renderLabRows(this.lab);
  }
}
