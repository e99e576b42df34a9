import type {
  ArticlePage,
  CategorizationResult,
  CategorizeDraft,
  ConceptTreeNode,
  InstanceRecord,
} from "./types.js";

export class ApiError extends Error {
  constructor(
    public readonly status: number,
    message: string,
  ) {
    super(message);
  }
}

async function parseError(response: Response): Promise<string> {
  try {
    const body = await response.json();
    if (typeof body.detail === "string") return body.detail;
    return JSON.stringify(body.detail ?? body);
  } catch {
    return `${response.status} ${response.statusText}`;
  }
}

/** Thin typed client over the portal JSON API; `baseUrl` "" means same origin. */
export class ApiClient {
  constructor(public readonly baseUrl: string = "") {}

  private async get<T>(path: string): Promise<T> {
    const response = await fetch(this.baseUrl + path);
    if (!response.ok) throw new ApiError(response.status, await parseError(response));
    return (await response.json()) as T;
  }

  private async post<T>(path: string, payload: unknown): Promise<T> {
    const response = await fetch(this.baseUrl + path, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(payload),
    });
    if (!response.ok) throw new ApiError(response.status, await parseError(response));
    return (await response.json()) as T;
  }

  getConcepts(): Promise<ConceptTreeNode[]> {
    return this.get("/api/concepts");
  }

  getConcept(id: string): Promise<ConceptTreeNode> {
    return this.get(`/api/concepts/${encodeURIComponent(id)}`);
  }

  getInstances(concept: string, transitive: boolean): Promise<InstanceRecord[]> {
    const params = new URLSearchParams({ concept, transitive: String(transitive) });
    return this.get(`/api/instances?${params}`);
  }

  getArticles(offset: number, limit: number): Promise<ArticlePage> {
    const params = new URLSearchParams({ offset: String(offset), limit: String(limit) });
    return this.get(`/api/articles?${params}`);
  }

  categorize(draft: CategorizeDraft): Promise<CategorizationResult> {
    return this.post("/api/categorize", draft);
  }
}
