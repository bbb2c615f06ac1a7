// Audio feedback: a probed value becomes a short sine tone whose pitch
// encodes the value on a two-octave log scale.

export const TONE_MS = 300;
export const BASE_HZ = 220;

/** 220 Hz at min, 880 Hz at max (two octaves, log scale); 440 Hz when min == max. */
export function frequencyFor(value: number, min: number, max: number): number {
  if (!(max > min)) return 440;
  const t = Math.min(1, Math.max(0, (value - min) / (max - min)));
  return BASE_HZ * Math.pow(2, 2 * t);
}

export class TonePlayer {
  private context: AudioContext | null = null;
  private warned = false;
  private available: boolean;

  constructor(private onWarning: (message: string) => void = () => {}) {
    this.available = typeof AudioContext !== "undefined";
  }

  /** Play a tone; returns false (after warning once) when audio is unavailable. */
  play(frequencyHz: number, durationMs: number = TONE_MS): boolean {
    if (!this.available) {
      if (!this.warned) {
        this.warned = true;
        this.onWarning("audio unavailable, showing numeric values only");
      }
      return false;
    }
    try {
      this.context = this.context ?? new AudioContext();
      const ctx = this.context;
      if (ctx.state === "suspended") void ctx.resume();
      const oscillator = ctx.createOscillator();
      const gain = ctx.createGain();
      oscillator.type = "sine";
      oscillator.frequency.value = frequencyHz;
      const now = ctx.currentTime;
      const duration = durationMs / 1000;
      // short attack/release ramps avoid clicks
      gain.gain.setValueAtTime(0, now);
      gain.gain.linearRampToValueAtTime(0.25, now + 0.01);
      gain.gain.setValueAtTime(0.25, now + duration - 0.03);
      gain.gain.linearRampToValueAtTime(0, now + duration);
      oscillator.connect(gain).connect(ctx.destination);
      oscillator.start(now);
      oscillator.stop(now + duration);
      return true;
    } catch {
      if (!this.warned) {
        this.warned = true;
        this.onWarning("audio unavailable, showing numeric values only");
      }
      this.available = false;
      return false;
    }
  }
}
