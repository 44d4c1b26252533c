// Console state and the controller mutating it. The client is a pure
// view of server state: every probability, amplitude and time shown
// comes from the latest API response, never from local arithmetic.

import { ApiClient, ApiRequestError, Snapshot } from './api.js'
import { HALF_PI, TraceData, parseTraceCsv } from './format.js'

export const PLAY_DT = Math.PI / 50

export interface ConsoleError {
  code: string
  message: string
  line?: number
}

export interface ConsoleState {
  sessionId: string | null
  snapshot: Snapshot | null
  assignments: string[][]
  playing: boolean
  playbackRate: number
  trace: TraceData | null
  traceError: string | null
  error: ConsoleError | null
  lastOutcome: string | null
}

export type Listener = (state: ConsoleState) => void

const BASE_TICK_MS = 60

export class ConsoleController {
  readonly state: ConsoleState = {
    sessionId: null,
    snapshot: null,
    assignments: [],
    playing: false,
    playbackRate: 1,
    trace: null,
    traceError: null,
    error: null,
    lastOutcome: null,
  }

  private timer: ReturnType<typeof setTimeout> | null = null

  constructor(
    private api: ApiClient,
    private onChange: Listener = () => {},
  ) {}

  private emit(): void {
    this.onChange(this.state)
  }

  private applySnapshot(snapshot: Snapshot): void {
    this.state.snapshot = snapshot
    this.state.sessionId = snapshot.id
    if (snapshot.assignments) this.state.assignments = snapshot.assignments
    this.state.error = null
    this.emit()
  }

  private fail(err: unknown): void {
    if (err instanceof ApiRequestError) {
      this.state.error = { code: err.code, message: err.message, line: err.line }
    } else {
      this.state.error = { code: 'network', message: String(err) }
    }
    this.emit()
  }

  async authorSystem(text: string): Promise<boolean> {
    this.pause()
    this.state.trace = null
    this.state.lastOutcome = null
    try {
      this.applySnapshot(await this.api.createSession(text))
      return true
    } catch (err) {
      // keep the previous session (and the user's input) on failure
      this.fail(err)
      return false
    }
  }

  async measure(sentence: number, value: 'true' | 'false' | 'sample', seed?: number): Promise<void> {
    if (!this.state.sessionId) return
    try {
      const resp = await this.api.measure(this.state.sessionId, sentence, value, seed)
      this.state.lastOutcome = `(${sentence}) → ${resp.outcome}, p = ${resp.probability.toFixed(4)}`
      this.applySnapshot(resp)
    } catch (err) {
      this.fail(err)
    }
  }

  async evolveBy(dt: number): Promise<void> {
    if (!this.state.sessionId) return
    try {
      this.applySnapshot(await this.api.evolve(this.state.sessionId, dt))
    } catch (err) {
      this.fail(err)
    }
  }

  /** Repeated fixed-step evolution until the server clock reaches target. */
  async playTo(target: number): Promise<void> {
    while (this.state.snapshot && this.state.snapshot.time < target - 1e-9) {
      await this.evolveBy(PLAY_DT)
      if (this.state.error) break
    }
  }

  async release(): Promise<void> {
    if (!this.state.sessionId) return
    this.pause()
    try {
      this.state.lastOutcome = null
      this.applySnapshot(await this.api.release(this.state.sessionId))
    } catch (err) {
      this.fail(err)
    }
  }

  setPlaybackRate(rate: number): void {
    this.state.playbackRate = rate
    this.emit()
    if (this.state.playing) {
      this.pause()
      this.play()
    }
  }

  play(): void {
    if (this.state.playing || !this.state.sessionId) return
    this.state.playing = true
    this.emit()
    const tick = async () => {
      if (!this.state.playing) return
      await this.evolveBy(PLAY_DT)
      if (!this.state.playing) return
      this.timer = setTimeout(tick, BASE_TICK_MS / this.state.playbackRate)
    }
    this.timer = setTimeout(tick, 0)
  }

  pause(): void {
    this.state.playing = false
    if (this.timer !== null) {
      clearTimeout(this.timer)
      this.timer = null
    }
    this.emit()
  }

  /** Client-side mirror of the server's range rules plus a window check. */
  validateTraceRange(t0: number, t1: number, dt: number): string | null {
    if (!Number.isFinite(t0) || !Number.isFinite(t1) || !Number.isFinite(dt)) {
      return 'time window values must be numbers'
    }
    if (t0 > t1) return 'need t0 ≤ t1'
    if (dt <= 0) return 'need dt > 0'
    if (t1 > t0 && dt > t1 - t0) return 'dt is larger than the window'
    return null
  }

  async loadTrace(t0: number, t1: number, dt: number): Promise<void> {
    if (!this.state.sessionId) return
    const problem = this.validateTraceRange(t0, t1, dt)
    if (problem) {
      this.state.traceError = problem
      this.state.trace = null
      this.emit()
      return
    }
    try {
      const csv = await this.api.trace(this.state.sessionId, t0, t1, dt)
      this.state.trace = parseTraceCsv(csv)
      this.state.traceError = null
      this.emit()
    } catch (err) {
      this.state.traceError = err instanceof ApiRequestError ? err.message : String(err)
      this.emit()
    }
  }

  /** Sentences present in the current system, from the snapshot tokens. */
  sentences(): number[] {
    const snap = this.state.snapshot
    if (!snap) return []
    const seen = new Set<number>()
    for (const label of Object.keys(snap.probabilities)) {
      seen.add(Number(label.split(':')[0]))
    }
    return [...seen].sort((a, b) => a - b)
  }
}

export { HALF_PI }
