import { GameApi } from "./api.js";
import { App } from "./app.js";

declare global {
  interface Window {
    API_BASE?: string;
    app?: App;
  }
}

// Same-origin by default; set window.API_BASE before this script loads to
// point the UI at a service running elsewhere.
const app = new App(new GameApi(window.API_BASE ?? ""));
app.mount(document.getElementById("app") as HTMLElement);
window.app = app;
