export {
  DensityCurve,
  InputError,
  RunManifest,
  TableRow,
  column,
  configNumber,
  configString,
  readDensityCsv,
  readManifest,
  readTableCsv,
} from "./schema.js";
export { FigureKind, FigureSpec, ScanResult, scanRunDir } from "./scan.js";
export {
  FIGURE_HEIGHT,
  FIGURE_WIDTH,
  buildOption,
  renderSvg,
  writeFigure,
} from "./render.js";
export { main } from "./cli.js";
