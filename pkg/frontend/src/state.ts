// View state and step controls. All transitions are pure: the app applies
// the returned state, then re-fetches pane data for the (possibly clamped)
// step so the four panes always show the same k.

export interface ViewState {
  sessionId: string;
  step: number;
  maxStep: number;
  vocabulary: string[];
  selectedWords: string[];
  selectedUnit: number | null;
  selectedAgent: string | null;
  playing: boolean;
  notice: string | null;
}

export type StepAction =
  | { type: "next" }
  | { type: "prev" }
  | { type: "jump"; step: number }
  | { type: "play" }
  | { type: "pause" };

export function initialViewState(
  sessionId: string,
  maxStep: number,
  vocabulary: string[],
): ViewState {
  return {
    sessionId,
    step: 0,
    maxStep,
    vocabulary,
    selectedWords: [],
    selectedUnit: null,
    selectedAgent: null,
    playing: false,
    notice: null,
  };
}

function clampStep(state: ViewState, wanted: number): { step: number; notice: string | null } {
  if (wanted < 0) {
    return { step: 0, notice: "already at the first step" };
  }
  if (wanted > state.maxStep) {
    return { step: state.maxStep, notice: "already at the final step" };
  }
  return { step: wanted, notice: null };
}

export function stepControls(state: ViewState, action: StepAction): ViewState {
  switch (action.type) {
    case "next": {
      const { step, notice } = clampStep(state, state.step + 1);
      const playing = state.playing && step < state.maxStep;
      return { ...state, step, notice, playing };
    }
    case "prev": {
      const { step, notice } = clampStep(state, state.step - 1);
      return { ...state, step, notice };
    }
    case "jump": {
      const { step, notice } = clampStep(state, action.step);
      return { ...state, step, notice };
    }
    case "play":
      return state.step >= state.maxStep
        ? { ...state, playing: false, notice: "already at the final step" }
        : { ...state, playing: true, notice: null };
    case "pause":
      return { ...state, playing: false };
  }
}

export function toggleWord(state: ViewState, word: string): ViewState {
  if (!state.vocabulary.includes(word)) {
    return { ...state, notice: `"${word}" is not in the vocabulary` };
  }
  const selected = state.selectedWords.includes(word)
    ? state.selectedWords.filter((w) => w !== word)
    : [...state.selectedWords, word];
  return { ...state, selectedWords: selected, notice: null };
}

export function selectUnit(state: ViewState, unitId: number | null): ViewState {
  return { ...state, selectedUnit: unitId };
}

export function selectAgent(state: ViewState, agent: string | null): ViewState {
  return { ...state, selectedAgent: agent };
}

// Drives play mode: calls advance() once per interval until the state the
// caller reports back reaches the final step.
export class Player {
  private timer: ReturnType<typeof setInterval> | null = null;

  constructor(
    private advanceFn: () => void,
    private intervalMs: number = 800,
  ) {}

  start(): void {
    if (this.timer === null) {
      this.timer = setInterval(this.advanceFn, this.intervalMs);
    }
  }

  stop(): void {
    if (this.timer !== null) {
      clearInterval(this.timer);
      this.timer = null;
    }
  }

  get running(): boolean {
    return this.timer !== null;
  }
}
