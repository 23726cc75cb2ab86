import { defineConfig } from "vitest/config";

export default defineConfig({
  test: {
    environment: "happy-dom",
    include: ["tests/**/*.test.ts"],
    exclude: process.env.CVMINER_E2E ? [] : ["tests/e2e.test.ts"],
    testTimeout: 30000,
  },
});
