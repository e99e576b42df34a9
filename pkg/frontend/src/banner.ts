// Error banner with a retry affordance; one per panel.

export function showError(container: HTMLElement, message: string, retry: () => void): void {
  clearError(container);
  const banner = document.createElement("div");
  banner.className = "error-banner";
  const text = document.createElement("span");
  text.textContent = `Backend unreachable or failing: ${message}`;
  const button = document.createElement("button");
  button.type = "button";
  button.className = "retry";
  button.textContent = "Retry";
  button.addEventListener("click", () => {
    clearError(container);
    retry();
  });
  banner.append(text, button);
  container.prepend(banner);
}

export function clearError(container: HTMLElement): void {
  container.querySelectorAll(".error-banner").forEach((el) => el.remove());
}
