import { readFileSync } from "node:fs";
import { dirname, join } from "node:path";
import { fileURLToPath } from "node:url";
import { vi } from "vitest";

const FIXTURE_DIR = join(dirname(fileURLToPath(import.meta.url)), "fixtures");

export function fixture<T>(name: string): T {
  return JSON.parse(readFileSync(join(FIXTURE_DIR, name), "utf-8")) as T;
}

type Handler = (url: string, init?: RequestInit) => { status?: number; body: unknown } | unknown;

/** Route fetch calls by "METHOD path" prefix; unmatched calls reject. */
export function stubFetch(routes: Record<string, Handler>): ReturnType<typeof vi.fn> {
  const mock = vi.fn(async (input: RequestInfo | URL, init?: RequestInit) => {
    const url = String(input);
    const method = init?.method ?? "GET";
    for (const [route, handler] of Object.entries(routes)) {
      const [routeMethod, prefix] = route.split(" ", 2);
      if (routeMethod === method && url.includes(prefix)) {
        const outcome = handler(url, init);
        const { status, body } =
          outcome !== null && typeof outcome === "object" && "body" in (outcome as object)
            ? (outcome as { status?: number; body: unknown })
            : { status: 200, body: outcome };
        const code = status ?? 200;
        return {
          ok: code >= 200 && code < 300,
          status: code,
          statusText: String(code),
          json: async () => body,
        } as Response;
      }
    }
    throw new TypeError(`fetch refused (no stub route): ${method} ${url}`);
  });
  vi.stubGlobal("fetch", mock);
  return mock;
}

export function failingFetch(): void {
  vi.stubGlobal(
    "fetch",
    vi.fn(async () => {
      throw new TypeError("fetch failed: connection refused");
    }),
  );
}

export function flush(): Promise<void> {
  // Let queued promise callbacks from panel refreshes settle.
  return new Promise((resolve) => setTimeout(resolve, 0));
}
