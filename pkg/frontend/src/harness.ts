/**
 * Executes a payload's embedded script the way a browser would: the
 * script runs in an isolated context where `o` is the output element,
 * and the page's text is whatever it assigned there.
 *
 * Node 20 provides every web API the stub needs (atob, Blob, Response,
 * DecompressionStream), so no browser install is required; the script
 * still runs as real JS against a DOM-shaped surface.
 */

import vm from "node:vm";

const SCRIPT_OPEN = "<script>\n";
const SCRIPT_CLOSE = "</script></body></html>";

export interface OutputElement {
  textContent: string;
}

/** Pull the script body out of a payload document. */
export function embeddedScript(html: string): string {
  const start = html.indexOf(SCRIPT_OPEN);
  const end = html.lastIndexOf(SCRIPT_CLOSE);
  if (start < 0 || end < 0 || end <= start) {
    throw new Error("not a payload document");
  }
  return html.slice(start + SCRIPT_OPEN.length, end);
}

/** Run a payload and return the text it rendered. */
export async function runPayload(html: string): Promise<string> {
  const o: OutputElement = { textContent: "Loading..." };
  const context = vm.createContext({
    o,
    atob,
    Blob,
    Response,
    DecompressionStream,
  });
  // the stub is an async IIFE and the script's completion value is its
  // promise, so awaiting the run awaits the render
  await vm.runInContext(embeddedScript(html), context, {
    timeout: 10_000,
  });
  return o.textContent;
}

/** Same, but with the decompression API missing, as on an old browser. */
export async function runPayloadWithoutStreams(html: string): Promise<string> {
  const o: OutputElement = { textContent: "Loading..." };
  const context = vm.createContext({ o, atob, Blob, Response });
  await vm.runInContext(embeddedScript(html), context, { timeout: 10_000 });
  return o.textContent;
}
