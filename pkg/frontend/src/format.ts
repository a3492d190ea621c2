/*
 * Pure display helpers. Rendering is string-in, string-out so the same
 * fetched state always produces the same screen, and the only game logic
 * allowed here is input validation (positivity and arity) -- all math
 * stays on the server.
 */

import type { LabReport, TranscriptRow } from "./api.js";

const POSITIVE_INT = /^[1-9][0-9]*$/;

export function escapeHtml(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

export function formatVector(entries: string[]): string {
  return `(${entries.join(", ")})`;
}

export function candidatePhrase(count: string, truncated: boolean): string {
  if (truncated) return `≥ ${count} candidates remain`;
  if (count === "1") return "1 candidate remains";
  return `${count} candidates remain`;
}

/**
 * Parse user-typed entries ("1 5 10 20" or comma separated) into decimal
 * strings. Returns an error message instead when an entry is not a
 * positive integer or the count differs from the session dimension.
 * Values are kept as strings, so arbitrarily large entries survive.
 */
export function parseEntries(text: string, n: number): { entries: string[] } | { error: string } {
  const tokens = text.trim().split(/[\s,]+/).filter((t) => t.length > 0);
  if (tokens.length !== n) {
    return { error: `expected ${n} entries, got ${tokens.length}` };
  }
  for (const token of tokens) {
    if (!POSITIVE_INT.test(token)) {
      return { error: `"${token}" is not a positive integer` };
    }
  }
  return { entries: tokens };
}

export function renderTranscriptRows(rows: TranscriptRow[]): string {
  return rows
    .map(
      (row, index) => `<tr>
  <td>${index + 1}</td>
  <td class="num">${escapeHtml(formatVector(row.question))}</td>
  <td class="num">${escapeHtml(row.response)}</td>
  <td>${escapeHtml(candidatePhrase(row.candidate_count, row.truncated))}</td>
</tr>`,
    )
    .join("\n");
}

export function labColumnLabels(statement: LabReport["statement"]): [string, string] {
  if (statement === "exists_forall") {
    return ["question q", "secret it fails to decode"];
  }
  return ["secret s", "question that decodes it"];
}

export function renderLabRows(report: LabReport): string {
  return report.evidence
    .map((row) => {
      const inner =
        row.inner === null ? "decodes every grid secret" : formatVector(row.inner);
      return `<tr><td class="num">${escapeHtml(formatVector(row.outer))}</td><td class="num">${escapeHtml(inner)}</td></tr>`;
    })
    .join("\n");
}
