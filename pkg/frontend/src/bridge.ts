/**
 * JSON-lines client for the backend bridge process.
 *
 * The backend exposes its exported call surface over stdin/stdout:
 * one request line in, one response line out (matched by id, possibly
 * out of order since blocking calls run on backend worker threads),
 * plus unsolicited {"event":"tick","value":n} lines from the
 * background increase loop.
 */

import { spawn, ChildProcessByStdio } from 'child_process';
import * as readline from 'readline';
import { Readable, Writable } from 'stream';

export type Handle = number;
export type FuturePair = [Handle, Handle];

export const STATUS_OK = 0;
export const STATUS_INTERRUPTED = 1;
export const STATUS_FIRST_ODD = 1;
export const STATUS_SECOND_ODD = 2;
export const STATUS_NULL_HANDLE = 100;
export const STATUS_STALE_HANDLE = 101;
export const STATUS_NOT_INITIALIZED = 102;

export interface StatusValue {
  status: number;
  value: number | null;
}

interface Pending {
  resolve: (result: unknown) => void;
  reject: (err: Error) => void;
}

export class Bridge {
  private proc: ChildProcessByStdio<Writable, Readable, null>;
  private nextId = 1;
  private pending = new Map<number, Pending>();
  private tickListeners = new Set<(value: number) => void>();
  private closed = false;

  constructor(pythonBin: string = process.env.ALACHE_PYTHON ?? 'python3') {
    this.proc = spawn(pythonBin, ['-m', 'agdalache.bridge'], {
      stdio: ['pipe', 'pipe', 'inherit'],
    });
    const rl = readline.createInterface({ input: this.proc.stdout });
    rl.on('line', (line) => this.onLine(line));
    this.proc.on('exit', () => {
      this.closed = true;
      for (const p of this.pending.values()) {
        p.reject(new Error('bridge process exited'));
      }
      this.pending.clear();
    });
  }

  private onLine(line: string): void {
    let msg: Record<string, unknown>;
    try {
      msg = JSON.parse(line);
    } catch {
      return; // stray non-protocol output
    }
    if (msg.event === 'tick') {
      for (const listener of this.tickListeners) {
        listener(msg.value as number);
      }
      return;
    }
    const pending = this.pending.get(msg.id as number);
    if (!pending) return;
    this.pending.delete(msg.id as number);
    if (msg.error !== undefined) {
      pending.reject(new Error(String(msg.error)));
    } else {
      pending.resolve(msg.result);
    }
  }

  private call(op: string, ...args: unknown[]): Promise<unknown> {
    if (this.closed) return Promise.reject(new Error('bridge is closed'));
    const id = this.nextId++;
    const promise = new Promise<unknown>((resolve, reject) => {
      this.pending.set(id, { resolve, reject });
    });
    this.proc.stdin.write(JSON.stringify({ id, op, args }) + '\n');
    return promise;
  }

  onTick(listener: (value: number) => void): () => void {
    this.tickListeners.add(listener);
    return () => this.tickListeners.delete(listener);
  }

  async initApp(): Promise<Handle> {
    return (await this.call('ec_init_app')) as Handle;
  }

  async increment(app: Handle, delta: number): Promise<StatusValue> {
    return (await this.call('ec_increment', app, delta)) as StatusValue;
  }

  async read(app: Handle): Promise<StatusValue> {
    return (await this.call('ec_read', app)) as StatusValue;
  }

  async increaseAsync(app: Handle, durationS: number): Promise<{ status: number; future: FuturePair | null }> {
    return (await this.call('ec_increase_async', app, durationS)) as {
      status: number;
      future: FuturePair | null;
    };
  }

  async futureGetInt(pair: FuturePair): Promise<StatusValue> {
    return (await this.call('al_future_get_int', pair)) as StatusValue;
  }

  async tryPutInterrupt(interruptHandle: Handle): Promise<number> {
    return (await this.call('al_future_try_put_interrupt', interruptHandle)) as number;
  }

  async freeHandle(h: Handle): Promise<number> {
    const r = (await this.call('al_handle_free', h)) as { status: number };
    return r.status;
  }

  async errorMessage(code: number): Promise<string> {
    return (await this.call('al_error_message', code)) as string;
  }

  async liveCount(): Promise<number> {
    return (await this.call('al_live_count')) as number;
  }

  close(): void {
    if (!this.closed) {
      this.proc.stdin.end();
    }
  }
}
