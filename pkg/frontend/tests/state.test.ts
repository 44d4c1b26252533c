import { afterEach, describe, expect, it, vi } from 'vitest'

import { ApiClient } from '../src/api.js'
import { ConsoleController, PLAY_DT } from '../src/state.js'

const SNAPSHOT = {
  id: 'abc123def456',
  time: 0,
  dim: 16,
  tau: Math.PI / 2,
  verdict: 'paradoxical',
  basis: { '0': '1:true', '1': '2:false', '2': '1:false', '3': '2:true' },
  probabilities: { '1:true': 0.25, '1:false': 0.25, '2:true': 0.25, '2:false': 0.25 },
  state: [] as [number, number][],
  assignments: [] as string[][],
}

function jsonResponse(body: unknown, status = 200): Response {
  return new Response(JSON.stringify(body), {
    status,
    headers: { 'content-type': 'application/json' },
  })
}

afterEach(() => {
  vi.unstubAllGlobals()
})

describe('server-authoritative state', () => {
  it('never changes a probability without a server response', async () => {
    // the mocked server always answers with the same snapshot, so no
    // amount of playing may alter what the console holds
    const calls: string[] = []
    vi.stubGlobal('fetch', async (url: RequestInfo | URL) => {
      calls.push(String(url))
      return jsonResponse(SNAPSHOT)
    })

    const seen: Array<Record<string, number>> = []
    const controller = new ConsoleController(new ApiClient(''), (state) => {
      if (state.snapshot) seen.push({ ...state.snapshot.probabilities })
    })
    await controller.authorSystem('(1) sentence (2) is false\n(2) sentence (1) is true')
    for (let i = 0; i < 10; i++) await controller.evolveBy(PLAY_DT)

    expect(seen.length).toBe(11)
    for (const probs of seen) expect(probs).toEqual(SNAPSHOT.probabilities)
    // every step went to the network; nothing was computed locally
    expect(calls.filter((u) => u.includes('/evolve')).length).toBe(10)
  })

  it('serializes overlapping requests through the queue', async () => {
    let inFlight = 0
    let maxInFlight = 0
    vi.stubGlobal('fetch', async () => {
      inFlight += 1
      maxInFlight = Math.max(maxInFlight, inFlight)
      await new Promise((r) => setTimeout(r, 5))
      inFlight -= 1
      return jsonResponse(SNAPSHOT)
    })

    const api = new ApiClient('')
    await Promise.all([
      api.createSession('x'),
      api.evolve('abc123def456', 0.1),
      api.measure('abc123def456', 1, 'true'),
      api.release('abc123def456'),
      api.trace('abc123def456', 0, 1, 0.5).catch(() => ''),
    ])
    expect(maxInFlight).toBe(1)
  })
})

describe('error handling', () => {
  it('carries structured parse errors with the line', async () => {
    vi.stubGlobal('fetch', async () =>
      jsonResponse({ error: 'malformed_line', message: 'line 2: bad', line: 2 }, 400),
    )
    const controller = new ConsoleController(new ApiClient(''))
    const ok = await controller.authorSystem('(1) sentence (1) is false\n???')
    expect(ok).toBe(false)
    expect(controller.state.error).toMatchObject({ code: 'malformed_line', line: 2 })
  })

  it('maps the impossible-hypothesis conflict', async () => {
    const responses = [
      jsonResponse({ ...SNAPSHOT }),
      jsonResponse({ error: 'zero_amplitude_outcome', message: 'impossible' }, 409),
    ]
    vi.stubGlobal('fetch', async () => responses.shift() as Response)
    const controller = new ConsoleController(new ApiClient(''))
    await controller.authorSystem('whatever')
    await controller.measure(1, 'true')
    expect(controller.state.error?.code).toBe('zero_amplitude_outcome')
  })

  it('keeps the previous session when authoring fails', async () => {
    const responses = [
      jsonResponse(SNAPSHOT),
      jsonResponse({ error: 'empty_system', message: 'no claims found' }, 400),
    ]
    vi.stubGlobal('fetch', async () => responses.shift() as Response)
    const controller = new ConsoleController(new ApiClient(''))
    await controller.authorSystem('good')
    await controller.authorSystem('')
    expect(controller.state.snapshot?.id).toBe(SNAPSHOT.id)
    expect(controller.state.error?.code).toBe('empty_system')
  })
})

describe('trace range validation', () => {
  const controller = new ConsoleController(new ApiClient(''))

  it('mirrors the server rules', () => {
    expect(controller.validateTraceRange(1, 0, 0.1)).toMatch(/t0/)
    expect(controller.validateTraceRange(0, 1, 0)).toMatch(/dt/)
    expect(controller.validateTraceRange(0, 1, -1)).toMatch(/dt/)
    expect(controller.validateTraceRange(0, 1, 0.1)).toBeNull()
  })

  it('flags a step larger than the window', () => {
    expect(controller.validateTraceRange(0, 1, 2)).toMatch(/window/)
  })
})

describe('sentences from snapshot', () => {
  it('derives the sorted sentence list', async () => {
    vi.stubGlobal('fetch', async () => jsonResponse(SNAPSHOT))
    const controller = new ConsoleController(new ApiClient(''))
    await controller.authorSystem('x')
    expect(controller.sentences()).toEqual([1, 2])
  })
})

describe('playback', () => {
  it('play issues evolve calls until paused, all through the server', async () => {
    const calls: string[] = []
    vi.stubGlobal('fetch', async (url: RequestInfo | URL, init?: RequestInit) => {
      calls.push(String(url))
      if (String(url).includes('/evolve')) {
        expect(JSON.parse(String(init?.body))).toEqual({ dt: PLAY_DT })
      }
      return jsonResponse(SNAPSHOT)
    })
    const controller = new ConsoleController(new ApiClient(''))
    await controller.authorSystem('x')
    controller.setPlaybackRate(4)
    controller.play()
    expect(controller.state.playing).toBe(true)
    await new Promise((r) => setTimeout(r, 120))
    controller.pause()
    expect(controller.state.playing).toBe(false)
    const evolves = calls.filter((u) => u.includes('/evolve')).length
    expect(evolves).toBeGreaterThanOrEqual(2)
    const settled = calls.length
    await new Promise((r) => setTimeout(r, 80))
    expect(calls.length).toBe(settled) // no ticks after pause
  })
})
