/** Browser shell: fixture picker, net canvas, step palette, trace and
 * phase panels.  Every state change round-trips through the HTTP API;
 * the page only draws what the server reports. */

import { ApiClient, ApiError } from './api';
import type { NetDocument, SessionState } from './model';
import { renderSvg } from './render';
import {
  buildViewModel, stepLabel, whatIfPreview,
  type PaletteEntry, type ViewModel,
} from './viewmodel';

interface Session {
  id: string;
  doc: NetDocument;
  state: SessionState;
}

function el<K extends keyof HTMLElementTagNameMap>(
    tag: K, cls?: string, text?: string): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  if (cls) node.className = cls;
  if (text !== undefined) node.textContent = text;
  return node;
}

export class App {
  private readonly api: ApiClient;
  private session: Session | null = null;
  private vm: ViewModel | null = null;

  private readonly picker = el('select', 'fixture-picker');
  private readonly openButton = el('button', 'open', 'open');
  private readonly undoButton = el('button', 'undo', 'undo');
  private readonly resetButton = el('button', 'reset', 'reset');
  private readonly banner = el('div', 'banner');
  private readonly canvas = el('div', 'canvas');
  private readonly palette = el('div', 'palette');
  private readonly tracePane = el('pre', 'trace');
  private readonly phasePane = el('div', 'phases');

  constructor(private readonly root: HTMLElement, api?: ApiClient) {
    this.api = api ?? new ApiClient(window.location.origin);
  }

  async start(): Promise<void> {
    const toolbar = el('div', 'toolbar');
    toolbar.append(this.picker, this.openButton, this.undoButton,
      this.resetButton);
    this.banner.hidden = true;
    const side = el('div', 'side');
    side.append(this.palette, this.phasePane, this.tracePane);
    const main = el('div', 'main');
    main.append(this.canvas, side);
    this.root.append(toolbar, this.banner, main);

    this.openButton.addEventListener('click', () => {
      void this.openFixture(this.picker.value);
    });
    this.undoButton.addEventListener('click', () => {
      void this.mutate((s) => this.api.undo(s.id, s.state.version));
    });
    this.resetButton.addEventListener('click', () => {
      void this.mutate((s) => this.api.reset(s.id, s.state.version));
    });

    const fixtures = await this.api.fixtures();
    for (const f of fixtures) {
      const option = el('option', undefined, `${f.name} (${f.kind})`);
      option.value = f.name;
      this.picker.append(option);
    }
    const first = fixtures[0];
    if (first) await this.openFixture(first.name);
  }

  private async openFixture(name: string): Promise<void> {
    try {
      if (this.session) await this.api.close(this.session.id);
      const created = await this.api.createFromFixture(name);
      const doc = await this.api.document(created.id);
      const state = await this.api.state(created.id);
      this.session = { id: created.id, doc, state };
      this.banner.hidden = true;
      this.refresh();
    } catch (err) {
      this.showError(err);
    }
  }

  private async mutate(
      action: (s: Session) => Promise<SessionState>): Promise<void> {
    const session = this.session;
    if (!session) return;
    try {
      session.state = await action(session);
      this.banner.hidden = true;
      this.refresh();
    } catch (err) {
      if (err instanceof ApiError && err.stale) {
        // someone else moved the session forward; re-sync and say so
        session.state = await this.api.state(session.id);
        this.refresh();
        this.showMessage('session changed elsewhere — view reloaded');
        return;
      }
      this.showError(err);
    }
  }

  private refresh(): void {
    const session = this.session;
    if (!session) return;
    this.vm = buildViewModel(session.doc, session.state);
    this.draw(null);
    this.drawPalette(this.vm.palette);
    this.drawPhases();
    void this.drawTrace();
  }

  private draw(preview: Set<string> | null): void {
    if (this.vm) this.canvas.innerHTML = renderSvg(this.vm, preview);
  }

  private drawPalette(entries: PaletteEntry[]): void {
    this.palette.replaceChildren(el('h3', undefined, 'steps'));
    for (const entry of entries) {
      const button = el('button', 'step', entry.label);
      button.disabled = !entry.enabled;
      if (entry.reason) button.title = `disabled: ${entry.reason}`;
      if (entry.enabled) {
        button.addEventListener('click', () => {
          void this.mutate((s) =>
            this.api.fire(s.id, entry.step, s.state.version));
        });
        button.addEventListener('mouseenter', () => {
          if (this.vm) this.draw(whatIfPreview(this.vm, entry.step));
        });
        button.addEventListener('mouseleave', () => this.draw(null));
      }
      this.palette.append(button);
    }
    if (this.vm?.truncated) {
      this.palette.append(el('p', 'note', 'step list truncated'));
    }
  }

  private drawPhases(): void {
    const phases = this.vm?.phases ?? null;
    this.phasePane.hidden = phases === null;
    if (!phases) return;
    this.phasePane.replaceChildren(el('h3', undefined, 'phases'));
    this.phasePane.append(
      el('p', undefined, `active: ${phases.activePhases.join(', ') || '—'}`));
    for (const blocked of phases.phaseBlocked) {
      this.phasePane.append(
        el('p', 'blocked', `${blocked.label} waits on ${blocked.reason}`));
    }
  }

  private async drawTrace(): Promise<void> {
    const session = this.session;
    if (!session) return;
    try {
      const trace = await this.api.trace(session.id);
      const steps = trace.steps.map(stepLabel).join(' ') || '(empty)';
      this.tracePane.textContent =
        `trace: ${steps}\nreplay: ${trace.replay_command}`;
    } catch (err) {
      this.showError(err);
    }
  }

  private showMessage(text: string): void {
    this.banner.textContent = text;
    this.banner.hidden = false;
  }

  private showError(err: unknown): void {
    if (err instanceof ApiError) {
      this.showMessage(`error ${err.status}: ${JSON.stringify(err.detail)}`);
    } else {
      this.showMessage(String(err));
    }
  }
}

const mount = document.getElementById('app');
if (mount) {
  // when the page is hosted apart from the service, point the client
  // at the API with e.g. index.html?api=http://localhost:8000
  const override = new URLSearchParams(window.location.search).get('api');
  const api = new ApiClient(override ?? window.location.origin);
  void new App(mount, api).start();
}
