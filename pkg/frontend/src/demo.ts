/**
 * Terminal even-counter demo.
 *
 * Line commands on stdin: `add N`, `run`, `stop`, `show`, `quit`.
 * `run` starts the 5-second background increase and prints one
 * `counter = <value>` line per tick; `stop` interrupts it live.
 * With `--script FILE` the commands are replayed from the file, where
 * `sleep MS` pauses the replay; `--debug-leaks` prints the backend's
 * live handle count right before exit.
 */

import * as fs from 'fs';
import * as readline from 'readline';
import { Bridge } from './bridge.js';
import { AppStateWrapper, FutureInterruptedError, FutureWrapper } from './sdk.js';

const RUN_DURATION_S = 5;

export class ViewModel {
  private runningFuture: FutureWrapper | null = null;

  constructor(
    private bridge: Bridge,
    private appState: AppStateWrapper,
    private print: (line: string) => void,
  ) {
    bridge.onTick((value) => this.print(`counter = ${value}`));
  }

  async handleCommand(line: string): Promise<'continue' | 'quit'> {
    const [cmd, ...args] = line.trim().split(/\s+/);
    switch (cmd) {
      case '':
        return 'continue';
      case 'add': {
        const delta = Number(args[0]);
        if (!Number.isInteger(delta)) {
          this.print('unknown command');
          return 'continue';
        }
        const result = await this.appState.incrementWith(delta);
        this.print(result.ok ? String(result.value) : result.error);
        return 'continue';
      }
      case 'run': {
        if (this.runningFuture !== null) {
          this.print('already running');
          return 'continue';
        }
        const future = await this.appState.increaseContinuouslyAsync(RUN_DURATION_S);
        this.runningFuture = future;
        void future
          .get()
          .catch((err) => {
            if (!(err instanceof FutureInterruptedError)) throw err;
          })
          .finally(() => {
            if (this.runningFuture === future) this.runningFuture = null;
          });
        return 'continue';
      }
      case 'stop': {
        if (this.runningFuture !== null) {
          await this.runningFuture.interrupt();
          this.runningFuture = null;
        }
        return 'continue';
      }
      case 'show': {
        this.print(String(await this.appState.read()));
        return 'continue';
      }
      case 'quit':
        return 'quit';
      default:
        this.print('unknown command');
        return 'continue';
    }
  }

  /** Interrupt anything still running and free the app handle. */
  async dispose(): Promise<void> {
    if (this.runningFuture !== null) {
      await this.runningFuture.dispose();
      this.runningFuture = null;
    }
    await this.appState.dispose();
  }
}

function delay(ms: number): Promise<void> {
  return new Promise((resolve) => setTimeout(resolve, ms));
}

async function main(): Promise<void> {
  const args = process.argv.slice(2);
  const scriptIndex = args.indexOf('--script');
  const scriptFile = scriptIndex >= 0 ? args[scriptIndex + 1] : null;
  const debugLeaks = args.includes('--debug-leaks');

  const bridge = new Bridge();
  const appState = await AppStateWrapper.create(bridge);
  const viewModel = new ViewModel(bridge, appState, (line) => console.log(line));

  const shutdown = async () => {
    await viewModel.dispose();
    if (debugLeaks) {
      console.log(`live_count = ${await bridge.liveCount()}`);
    }
    bridge.close();
  };

  if (scriptFile !== null) {
    const lines = fs.readFileSync(scriptFile, 'utf8').split('\n');
    for (const line of lines) {
      const sleepMatch = line.trim().match(/^sleep\s+(\d+)$/);
      if (sleepMatch) {
        await delay(Number(sleepMatch[1]));
        continue;
      }
      if (line.trim() === '') continue;
      if ((await viewModel.handleCommand(line)) === 'quit') break;
    }
    await shutdown();
    process.exit(0);
  }

  const rl = readline.createInterface({ input: process.stdin, terminal: false });
  for await (const line of rl) {
    if ((await viewModel.handleCommand(line)) === 'quit') break;
  }
  await shutdown();
  process.exit(0);
}

const isMain = process.argv[1]?.endsWith('demo.js');
if (isMain) {
  main().catch((err) => {
    console.error(err);
    process.exit(1);
  });
}
