// Non-blocking notice strip: API failures land here instead of alert().

import { el } from "./dom.js";

export interface NoticeAction {
  label: string;
  run: () => void;
}

export class NoticeArea {
  readonly element: HTMLElement;

  constructor(private timeoutMs = 6000) {
    this.element = el("div", { class: "notices", role: "status" });
  }

  notify(message: string, action?: NoticeAction): HTMLElement {
    const notice = el("div", { class: "notice" }, [message]);
    if (action) {
      const button = el("button", { class: "notice-action" }, [action.label]);
      button.addEventListener("click", () => {
        action.run();
        notice.remove();
      });
      notice.append(button);
    }
    const dismiss = el("button", { class: "notice-dismiss", title: "Dismiss" }, ["x"]);
    dismiss.addEventListener("click", () => notice.remove());
    notice.append(dismiss);
    this.element.append(notice);
    if (this.timeoutMs > 0 && !action) {
      setTimeout(() => notice.remove(), this.timeoutMs);
    }
    return notice;
  }
}
