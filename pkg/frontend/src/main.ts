import { makeClient } from "./api.js";
import { createApp } from "./app.js";

const root = document.getElementById("app");
if (!root) throw new Error("missing #app mount point");

// Same-origin by default; override for a service on another host with
// e.g. ?api=http://localhost:8472
const override = new URLSearchParams(window.location.search).get("api");
createApp(root, makeClient(override ?? window.location.origin));
