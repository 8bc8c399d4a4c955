import { ApiClient } from "./api.js";
import { SessionController } from "./controller.js";
import { render } from "./view.js";

const root = document.getElementById("app");
if (!root) throw new Error("missing #app mount point");

const controller = new SessionController(new ApiClient(""));
const handlers = {
  engage: () => void controller.submitFeedback(true),
  skip: () => void controller.submitFeedback(false),
  dismiss: () => controller.dismissError(),
};

controller.onChange((state) => render(root, state, handlers));
void controller.start();
