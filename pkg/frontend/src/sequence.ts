/* Request sequencing: concurrent API calls are allowed (the method
 * comparison fans out per method), but a response only lands if no newer
 * request for the same slot was issued meanwhile. */

export class RequestSequencer {
  private latest = new Map<string, number>();
  private counter = 0;

  issue(slot: string): number {
    const token = ++this.counter;
    this.latest.set(slot, token);
    return token;
  }

  accept(slot: string, token: number): boolean {
    return this.latest.get(slot) === token;
  }
}
