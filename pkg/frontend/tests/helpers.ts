import { fileURLToPath } from "node:url";

/** Absolute path of a checked-in fixture (tests run from dist/tests). */
export function fixture(name: string): string {
  return fileURLToPath(new URL(`../../tests/fixtures/${name}`, import.meta.url));
}
