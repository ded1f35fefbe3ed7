/**
 * Resource-safe wrappers over the backend bridge.
 *
 * FutureWrapper owns the 2-slot handle pair of one background
 * computation and guarantees each handle is released exactly once,
 * whether the future is queried, interrupted, or simply disposed
 * (dispose auto-interrupts a still-running computation).  JavaScript
 * has no destructors, so dispose() is the explicit analog; call it
 * from a finally block.
 */

import { Bridge, FuturePair, Handle, STATUS_INTERRUPTED, STATUS_OK } from './bridge.js';

export class FutureInterruptedError extends Error {
  constructor() {
    super('future was interrupted');
  }
}

export class FutureWrapper {
  private pair: FuturePair = [0, 0];
  private queried = false;
  private interrupted = false;
  private valid = false;

  private constructor(private bridge: Bridge) {}

  /**
   * Start a computation via `starter`, which must invoke a fork-style
   * backend call that fills both slots (0: interrupt, 1: result).
   */
  static async create(
    bridge: Bridge,
    starter: (slots: FuturePair) => Promise<void>,
  ): Promise<FutureWrapper> {
    const wrapper = new FutureWrapper(bridge);
    await starter(wrapper.pair);
    wrapper.valid = wrapper.pair[0] !== 0 && wrapper.pair[1] !== 0;
    return wrapper;
  }

  get isValid(): boolean {
    return this.valid;
  }

  get wasInterrupted(): boolean {
    return this.interrupted;
  }

  /** Block until resolution; frees both handles on completion. */
  async get(): Promise<number> {
    if (!this.valid) throw new Error('future is not valid');
    if (this.interrupted) throw new FutureInterruptedError();
    if (this.queried) throw new Error('future already queried');
    const { status, value } = await this.bridge.futureGetInt(this.pair);
    if (this.interrupted) {
      // a concurrent interrupt()/dispose() freed the handles already
      throw new FutureInterruptedError();
    }
    this.queried = true;
    await this.bridge.freeHandle(this.pair[0]);
    await this.bridge.freeHandle(this.pair[1]);
    if (status !== STATUS_OK || value === null) {
      throw new FutureInterruptedError();
    }
    return value;
  }

  /** Interrupt the computation and release both handles.  Idempotent. */
  async interrupt(): Promise<void> {
    if (!this.valid || this.interrupted || this.queried) return;
    this.interrupted = true;
    await this.bridge.tryPutInterrupt(this.pair[0]); // consumes slot 0
    await this.bridge.freeHandle(this.pair[1]);
  }

  /** Destructor analog: auto-interrupts if never queried or interrupted. */
  async dispose(): Promise<void> {
    if (this.valid && !this.queried && !this.interrupted) {
      await this.interrupt();
    }
  }
}

/**
 * Fire-and-forget future: cannot be waited for, but runs the given
 * triggers in order, exactly once, when the computation completes.
 * An interrupted computation fires no triggers.  A throwing trigger
 * is logged and does not stop the remaining triggers.
 */
export class TriggerFuture {
  /** Resolves when the waiter has finished (for tests and shutdown). */
  readonly settled: Promise<void>;

  constructor(
    private future: FutureWrapper,
    triggers: Array<(value: number) => void>,
  ) {
    this.settled = (async () => {
      let value: number;
      try {
        value = await future.get();
      } catch {
        return; // interrupted: no triggers fire
      }
      for (const trigger of triggers) {
        try {
          trigger(value);
        } catch (err) {
          console.error('trigger failed:', err);
        }
      }
    })();
  }

  async interrupt(): Promise<void> {
    await this.future.interrupt();
  }

  async dispose(): Promise<void> {
    await this.future.dispose();
    await this.settled;
  }
}

export type IncrementResult =
  | { ok: true; value: number }
  | { ok: false; error: string };

/** Holds the exported app-state handle for exactly its own lifetime. */
export class AppStateWrapper {
  private constructor(
    private bridge: Bridge,
    private handle: Handle,
  ) {}

  static async create(bridge: Bridge): Promise<AppStateWrapper> {
    const handle = await bridge.initApp();
    if (handle === 0) throw new Error('backend runtime is not initialized');
    return new AppStateWrapper(bridge, handle);
  }

  async read(): Promise<number> {
    const { status, value } = await this.bridge.read(this.handle);
    if (status !== STATUS_OK || value === null) {
      throw new Error(await this.bridge.errorMessage(status));
    }
    return value;
  }

  async incrementWith(delta: number): Promise<IncrementResult> {
    const { status, value } = await this.bridge.increment(this.handle, delta);
    if (status === STATUS_OK && value !== null) {
      return { ok: true, value };
    }
    return { ok: false, error: await this.bridge.errorMessage(status) };
  }

  async increaseContinuouslyAsync(durationS: number): Promise<FutureWrapper> {
    return FutureWrapper.create(this.bridge, async (slots) => {
      const started = await this.bridge.increaseAsync(this.handle, durationS);
      if (started.status === STATUS_OK && started.future) {
        slots[0] = started.future[0];
        slots[1] = started.future[1];
      }
    });
  }

  async dispose(): Promise<void> {
    if (this.handle !== 0) {
      await this.bridge.freeHandle(this.handle);
      this.handle = 0;
    }
  }
}

export { STATUS_INTERRUPTED, STATUS_OK };
