// Typed client for the workbench gateway. Raw response text is kept next to
// every parsed payload: pane contents and displayed metric numbers must be
// exactly what the server sent, byte for byte.

import type {
  SessionMeta,
  SheetDocument,
  ValidationReport,
  WireSeries,
  WireTriple,
  WireUnits,
} from "./types.js";

export interface Raw<T> {
  raw: string;
  data: T;
}

export class GatewayError extends Error {
  constructor(
    public status: number,
    public code: string,
    message: string,
  ) {
    super(message);
  }
}

async function readJson<T>(resp: Response): Promise<Raw<T>> {
  const raw = await resp.text();
  if (!resp.ok) {
    let code = "http-error";
    let message = `HTTP ${resp.status}`;
    try {
      const body = JSON.parse(raw);
      code = body.code ?? code;
      message = body.message ?? message;
    } catch {
      // non-JSON error body; keep defaults
    }
    throw new GatewayError(resp.status, code, message);
  }
  return { raw, data: JSON.parse(raw) as T };
}

export class ApiClient {
  constructor(
    private baseUrl: string = "",
    private fetchFn: typeof fetch = fetch,
  ) {}

  private url(path: string): string {
    return `${this.baseUrl}${path}`;
  }

  async createSession(
    corpusCsv: string,
    wordlist: string,
    policy?: { mode?: string; case_fold?: boolean; unicode_normalize?: boolean },
  ): Promise<SessionMeta> {
    const resp = await this.fetchFn(this.url("/api/sessions"), {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify({ corpus_csv: corpusCsv, wordlist, policy }),
    });
    return (await readJson<SessionMeta>(resp)).data;
  }

  async sessionMeta(sessionId: string): Promise<SessionMeta> {
    const resp = await this.fetchFn(this.url(`/api/sessions/${sessionId}`));
    return (await readJson<SessionMeta>(resp)).data;
  }

  async units(sessionId: string): Promise<Raw<WireUnits>> {
    const resp = await this.fetchFn(this.url(`/api/sessions/${sessionId}/units`));
    return readJson<WireUnits>(resp);
  }

  async networks(sessionId: string, step: number): Promise<Raw<WireTriple>> {
    const resp = await this.fetchFn(
      this.url(`/api/sessions/${sessionId}/networks?step=${step}`),
    );
    return readJson<WireTriple>(resp);
  }

  async metrics(sessionId: string, kind: string, metric: string): Promise<Raw<WireSeries>> {
    const resp = await this.fetchFn(
      this.url(
        `/api/sessions/${sessionId}/metrics?kind=${encodeURIComponent(kind)}&metric=${encodeURIComponent(metric)}`,
      ),
    );
    return readJson<WireSeries>(resp);
  }

  async putSheet(sessionId: string, sheet: SheetDocument): Promise<ValidationReport> {
    const resp = await this.fetchFn(this.url(`/api/sessions/${sessionId}/sheet`), {
      method: "PUT",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(sheet),
    });
    return (await readJson<ValidationReport>(resp)).data;
  }

  async getSheet(
    sessionId: string,
  ): Promise<SheetDocument & { validation: ValidationReport }> {
    const resp = await this.fetchFn(this.url(`/api/sessions/${sessionId}/sheet`));
    return (await readJson<SheetDocument & { validation: ValidationReport }>(resp)).data;
  }
}

// Pull the value tokens of a metrics payload out of the raw JSON text, so a
// readout can show the server's own number literals rather than a re-format.
export function extractValueLiterals(rawSeriesJson: string): string[] {
  const match = rawSeriesJson.match(/"values"\s*:\s*\[([^\]]*)\]/);
  if (!match) {
    return [];
  }
  const body = match[1].trim();
  if (body === "") {
    return [];
  }
  return body.split(",").map((token) => token.trim());
}
