// 1 s polling with exponential backoff on connection failure. A single
// operator tool doesn't need push updates; polling keeps the service
// stateless about viewers.

export interface Poller {
  stop(): void;
}

export interface PollOptions {
  intervalMs?: number; // healthy cadence
  maxBackoffMs?: number;
  onError?: (err: unknown, consecutiveFailures: number) => void;
  onRecover?: () => void;
}

export function startPolling(tick: () => Promise<void>, opts: PollOptions = {}): Poller {
  const interval = opts.intervalMs ?? 1000;
  const maxBackoff = opts.maxBackoffMs ?? 10_000;
  let failures = 0;
  let stopped = false;
  let timer: ReturnType<typeof setTimeout> | undefined;

  const run = async () => {
    if (stopped) return;
    try {
      await tick();
      if (failures > 0) opts.onRecover?.();
      failures = 0;
    } catch (err) {
      failures += 1;
      opts.onError?.(err, failures);
    }
    if (stopped) return;
    const delay = failures === 0 ? interval : Math.min(interval * 2 ** failures, maxBackoff);
    timer = setTimeout(run, delay);
  };

  timer = setTimeout(run, 0);
  return {
    stop() {
      stopped = true;
      if (timer !== undefined) clearTimeout(timer);
    },
  };
}
