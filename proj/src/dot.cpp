#include "latsep/dot.hpp"

namespace latsep {

namespace {

std::string quote(const std::string& s) { return "\"" + s + "\""; }

}  // namespace

std::string space_dot(const SpaceSpec& spec, int fan_sample) {
  std::string out = "digraph space {\n  rankdir=BT;\n  node [shape=circle];\n";
  for (int p = 0; p < spec.named_count(); ++p) {
    out += "  " + quote(spec.named_id(p)) + " [shape=" +
           (spec.is_limit(p) ? "doublecircle" : "circle") + "];\n";
  }
  for (int f = 0; f < spec.fan_count(); ++f) {
    const Fan& fan = spec.fan(f);
    std::string dots = fan.id + "...";
    for (int i = 0; i < fan_sample; ++i) {
      std::string m = fan.id + "[" + std::to_string(i) + "]";
      out += "  " + quote(m) + " [shape=point, xlabel=" + quote(m) + "];\n";
      for (int q : mask_indices(fan.below))
        out += "  " + quote(spec.named_id(q)) + " -> " + quote(m) + ";\n";
      for (int q : mask_indices(fan.above))
        out += "  " + quote(m) + " -> " + quote(spec.named_id(q)) + ";\n";
    }
    out += "  " + quote(dots) + " [shape=plaintext];\n";
    out += "  " + quote(dots) + " -> " + quote(spec.named_id(fan.limit)) +
           " [style=dotted, arrowhead=open, label=\"lim\"];\n";
  }
  for (auto [a, b] : cover_pairs(spec.named_order()))
    out += "  " + quote(spec.named_id(a)) + " -> " + quote(spec.named_id(b)) + ";\n";
  out += "}\n";
  return out;
}

std::string lattice_dot(const FinDLat& L) {
  std::string out = "digraph lattice {\n  rankdir=BT;\n  node [shape=circle];\n";
  for (int i = 0; i < L.size(); ++i) out += "  " + quote(L.id(i)) + ";\n";
  for (auto [a, b] : cover_pairs(L.order()))
    out += "  " + quote(L.id(a)) + " -> " + quote(L.id(b)) + ";\n";
  out += "}\n";
  return out;
}

}  // namespace latsep
