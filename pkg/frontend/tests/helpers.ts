import { readFileSync } from "node:fs";
import { dirname, join } from "node:path";
import { fileURLToPath } from "node:url";

const here = dirname(fileURLToPath(import.meta.url));

export function fixture<T>(name: string): T {
  return JSON.parse(readFileSync(join(here, "fixtures", name), "utf-8")) as T;
}

export function fixtureText(name: string): string {
  return readFileSync(join(here, "fixtures", name), "utf-8");
}

/** fetch stub that replays a recorded body for the first matching route */
export function replayFetch(
  routes: { match: RegExp; body: unknown; status?: number }[],
): (input: string, init?: RequestInit) => Promise<Response> {
  return async (input: string) => {
    const route = routes.find((r) => r.match.test(input));
    if (!route) {
      return new Response(
        JSON.stringify({ error: { code: "NOT_FOUND", message: `no route for ${input}` } }),
        { status: 404 },
      );
    }
    return new Response(JSON.stringify(route.body), { status: route.status ?? 200 });
  };
}
