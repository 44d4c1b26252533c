// Thin typed client for the session service. All calls are funneled
// through one promise chain so requests for the single active session
// never overlap (the server serializes per-session writes; we keep the
// tab well-behaved on top of that).

export interface Snapshot {
  id: string
  time: number
  dim: number
  tau: number
  verdict: string
  basis: Record<string, string>
  probabilities: Record<string, number>
  state: [number, number][]
  assignments?: string[][]
}

export interface MeasureResponse extends Snapshot {
  probability: number
  outcome: 'true' | 'false' | 'indeterminate'
}

export class ApiRequestError extends Error {
  constructor(
    readonly status: number,
    readonly code: string,
    message: string,
    readonly line?: number,
  ) {
    super(message)
  }
}

async function parseError(resp: Response): Promise<ApiRequestError> {
  let code = 'http_error'
  let message = `${resp.status} ${resp.statusText}`
  let line: number | undefined
  try {
    const body = await resp.json()
    if (typeof body.error === 'string') code = body.error
    if (typeof body.message === 'string') message = body.message
    if (typeof body.line === 'number') line = body.line
  } catch {
    // non-JSON error body; keep the status line
  }
  return new ApiRequestError(resp.status, code, message, line)
}

export class ApiClient {
  private queue: Promise<unknown> = Promise.resolve()

  constructor(readonly baseUrl: string = '') {}

  private enqueue<T>(task: () => Promise<T>): Promise<T> {
    const next = this.queue.then(task, task)
    this.queue = next.catch(() => undefined)
    return next
  }

  private async request<T>(method: string, path: string, body?: unknown): Promise<T> {
    return this.enqueue(async () => {
      const resp = await fetch(this.baseUrl + path, {
        method,
        headers: body === undefined ? undefined : { 'Content-Type': 'application/json' },
        body: body === undefined ? undefined : JSON.stringify(body),
      })
      if (!resp.ok) throw await parseError(resp)
      return (await resp.json()) as T
    })
  }

  createSession(dsl: string): Promise<Snapshot> {
    return this.request('POST', '/api/sessions', { dsl })
  }

  getSession(id: string): Promise<Snapshot> {
    return this.request('GET', `/api/sessions/${id}`)
  }

  measure(id: string, sentence: number, value: 'true' | 'false' | 'sample', seed?: number): Promise<MeasureResponse> {
    const body: Record<string, unknown> = { sentence, value }
    if (seed !== undefined) body.seed = seed
    return this.request('POST', `/api/sessions/${id}/measure`, body)
  }

  evolve(id: string, dt: number): Promise<Snapshot> {
    return this.request('POST', `/api/sessions/${id}/evolve`, { dt })
  }

  release(id: string): Promise<Snapshot> {
    return this.request('POST', `/api/sessions/${id}/release`, {})
  }

  /** Raw trace CSV for [t0, t1] sampled every dt. */
  trace(id: string, t0: number, t1: number, dt: number): Promise<string> {
    return this.enqueue(async () => {
      const params = new URLSearchParams({ t0: String(t0), t1: String(t1), dt: String(dt) })
      const resp = await fetch(`${this.baseUrl}/api/sessions/${id}/trace?${params}`)
      if (!resp.ok) throw await parseError(resp)
      return resp.text()
    })
  }
}
