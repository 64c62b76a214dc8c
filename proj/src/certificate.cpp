#include "leafbound/certificate.hpp"

#include "leafbound/errors.hpp"
#include "leafbound/tree.hpp"

#include <istream>
#include <ostream>
#include <sstream>

namespace leafbound {

namespace {

template <class T> std::string join(const std::vector<T> &xs, char sep) {
  std::ostringstream out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i)
      out << sep;
    if constexpr (std::is_same_v<T, Rational>)
      out << to_string(xs[i]);
    else
      out << xs[i];
  }
  return out.str();
}

std::vector<std::string> split(const std::string &text, char sep) {
  std::vector<std::string> out;
  if (text.empty())
    return out;
  std::size_t start = 0;
  while (true) {
    auto pos = text.find(sep, start);
    out.push_back(text.substr(start, pos - start));
    if (pos == std::string::npos)
      break;
    start = pos + 1;
  }
  return out;
}

std::size_t to_size(const std::string &text) {
  try {
    std::size_t used = 0;
    auto v = std::stoull(text, &used);
    if (used != text.size())
      throw InputError("");
    return static_cast<std::size_t>(v);
  } catch (const std::exception &) {
    throw InputError("certificate: expected a count, got '" + text + "'");
  }
}

int to_int(const std::string &text) {
  try {
    std::size_t used = 0;
    int v = std::stoi(text, &used);
    if (used != text.size())
      throw InputError("");
    return v;
  } catch (const std::exception &) {
    throw InputError("certificate: expected an integer, got '" + text + "'");
  }
}

bool to_bool(const std::string &text) {
  if (text == "true")
    return true;
  if (text == "false")
    return false;
  throw InputError("certificate: expected true or false, got '" + text + "'");
}

const char *bool_text(bool b) { return b ? "true" : "false"; }

std::string stats_text(const BaseStats &s) {
  std::ostringstream out;
  out << s.w2 << ':' << s.w3 << ':' << s.y3 << ':' << s.y4 << ':' << s.x
      << ':' << s.k << ':' << s.k2 << ':' << s.u << ':' << to_string(s.alpha)
      << ':' << (s.terminal ? 1 : 0);
  return out.str();
}

BaseStats parse_stats(const std::string &text) {
  auto f = split(text, ':');
  if (f.size() != 10)
    throw InputError("certificate: malformed component stats '" + text + "'");
  BaseStats s;
  s.w2 = to_size(f[0]);
  s.w3 = to_size(f[1]);
  s.y3 = to_size(f[2]);
  s.y4 = to_size(f[3]);
  s.x = to_size(f[4]);
  s.k = to_size(f[5]);
  s.k2 = to_size(f[6]);
  s.u = to_size(f[7]);
  s.alpha = parse_rational(f[8]);
  s.terminal = to_size(f[9]) != 0;
  return s;
}

struct TraceWriter {
  std::ostream &out;

  void operator()(const ReductionTrace &r) const {
    out << "trace reduction node=" << r.node << " v=" << r.v << " e=" << r.e
        << " kind=" << name(r.kind) << " rule=" << r.rule
        << " parent_cost=" << to_string(r.parent_cost)
        << " child_costs=" << join(r.child_costs, ',')
        << " children=" << join(r.children, ',') << " min_gain=" << r.min_gain
        << " leaf_gain=" << r.leaf_gain;
    for (const Witness &w : r.witnesses)
      out << " w." << w.role << '=' << join(w.vertices, ',');
    out << '\n';
  }
  void operator()(const EdgeTrace &r) const {
    out << "trace edge node=" << r.node << '\n';
  }
  void operator()(const ExactTrace &r) const {
    out << "trace exact node=" << r.node << " v=" << r.v << " e=" << r.e
        << " leaves=" << r.leaves << '\n';
  }
  void operator()(const BaseTrace &r) const {
    out << "trace base node=" << r.node << " v=" << r.v << " e=" << r.e
        << " kind=" << name(r.kind)
        << " base_alpha=" << to_string(r.base_alpha)
        << " final_alpha=" << to_string(r.final_alpha)
        << " fallback=" << bool_text(r.exhaustive_fallback);
    for (const BaseStats &s : r.components)
      out << " comp=" << stats_text(s);
    out << '\n';
  }
  void operator()(const StepTrace &r) const {
    const StepRecord &s = r.record;
    out << "trace step node=" << r.node << " kind=" << name(s.kind)
        << " pivot=" << s.pivot << " du=" << s.du << " db=" << s.db
        << " dk=" << s.dk << " ds=" << s.ds << " dt=" << s.dt
        << " profit=" << to_string(s.profit) << '\n';
  }
};

using Fields = std::vector<std::pair<std::string, std::string>>;

Fields parse_fields(std::istringstream &in) {
  Fields out;
  std::string token;
  while (in >> token) {
    auto eq = token.find('=');
    if (eq == std::string::npos)
      throw InputError("certificate: expected key=value, got '" + token + "'");
    out.emplace_back(token.substr(0, eq), token.substr(eq + 1));
  }
  return out;
}

const std::string &field(const Fields &fs, const std::string &key) {
  for (const auto &[k, v] : fs)
    if (k == key)
      return v;
  throw InputError("certificate: trace record lacks '" + key + "'");
}

std::vector<std::size_t> sizes(const std::string &text) {
  std::vector<std::size_t> out;
  for (const auto &part : split(text, ','))
    out.push_back(to_size(part));
  return out;
}

TraceEntry parse_trace(const std::string &type, const Fields &fs) {
  if (type == "reduction") {
    ReductionTrace r;
    r.node = to_size(field(fs, "node"));
    r.v = to_size(field(fs, "v"));
    r.e = to_size(field(fs, "e"));
    auto kind = reduction_kind_from_name(field(fs, "kind"));
    if (!kind)
      throw InputError("certificate: unknown reduction '" + field(fs, "kind") +
                       "'");
    r.kind = *kind;
    r.rule = field(fs, "rule");
    r.parent_cost = parse_rational(field(fs, "parent_cost"));
    for (const auto &c : split(field(fs, "child_costs"), ','))
      r.child_costs.push_back(parse_rational(c));
    r.children = sizes(field(fs, "children"));
    r.min_gain = to_int(field(fs, "min_gain"));
    r.leaf_gain = to_int(field(fs, "leaf_gain"));
    for (const auto &[k, v] : fs)
      if (k.rfind("w.", 0) == 0) {
        Witness w{k.substr(2), {}};
        for (std::size_t x : sizes(v))
          w.vertices.push_back(static_cast<VertexId>(x));
        r.witnesses.push_back(std::move(w));
      }
    return r;
  }
  if (type == "edge")
    return EdgeTrace{to_size(field(fs, "node"))};
  if (type == "exact")
    return ExactTrace{to_size(field(fs, "node")), to_size(field(fs, "v")),
                      to_size(field(fs, "e")), to_size(field(fs, "leaves"))};
  if (type == "base") {
    BaseTrace r;
    r.node = to_size(field(fs, "node"));
    r.v = to_size(field(fs, "v"));
    r.e = to_size(field(fs, "e"));
    const std::string &kind = field(fs, "kind");
    if (kind == name(BaseKind::Star))
      r.kind = BaseKind::Star;
    else if (kind == name(BaseKind::CubicStar))
      r.kind = BaseKind::CubicStar;
    else if (kind == name(BaseKind::Bipartite))
      r.kind = BaseKind::Bipartite;
    else
      throw InputError("certificate: unknown base '" + kind + "'");
    r.base_alpha = parse_rational(field(fs, "base_alpha"));
    r.final_alpha = parse_rational(field(fs, "final_alpha"));
    r.exhaustive_fallback = to_bool(field(fs, "fallback"));
    for (const auto &[k, v] : fs)
      if (k == "comp")
        r.components.push_back(parse_stats(v));
    return r;
  }
  if (type == "step") {
    StepTrace r;
    r.node = to_size(field(fs, "node"));
    auto kind = step_kind_from_name(field(fs, "kind"));
    if (!kind)
      throw InputError("certificate: unknown step '" + field(fs, "kind") + "'");
    r.record.kind = *kind;
    r.record.pivot = static_cast<VertexId>(to_size(field(fs, "pivot")));
    r.record.du = to_int(field(fs, "du"));
    r.record.db = to_int(field(fs, "db"));
    r.record.dk = to_int(field(fs, "dk"));
    r.record.ds = to_int(field(fs, "ds"));
    r.record.dt = to_int(field(fs, "dt"));
    r.record.profit = parse_rational(field(fs, "profit"));
    return r;
  }
  throw InputError("certificate: unknown trace record '" + type + "'");
}

} // namespace

void write_certificate(std::ostream &out, const Certificate &c) {
  out << "graph.v " << c.v << '\n'
      << "graph.e " << c.e << '\n'
      << "graph.s " << c.s << '\n'
      << "graph.t " << c.t << '\n'
      << "bound.num " << c.bound.numerator() << '\n'
      << "bound.den " << c.bound.denominator() << '\n'
      << "min_leaves " << c.min_leaves << '\n'
      << "leaves " << c.leaves << '\n'
      << "verified " << bool_text(c.verified) << '\n'
      << "trace.count " << c.trace.size() << '\n';
  for (const TraceEntry &entry : c.trace)
    std::visit(TraceWriter{out}, entry);
  out << "tree.count " << c.tree.edges.size() << '\n';
  for (const Edge &e : c.tree.edges)
    out << "tree " << e.u << ' ' << e.v << '\n';
}

std::string certificate_text(const Certificate &cert) {
  std::ostringstream out;
  write_certificate(out, cert);
  return out.str();
}

Certificate parse_certificate(std::istream &in) {
  Certificate c;
  std::int64_t num = 0, den = 1;
  std::size_t trace_count = 0, tree_count = 0;
  std::vector<Edge> edges;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#')
      continue;
    std::istringstream ls(line);
    std::string key, value;
    ls >> key;
    if (key == "trace") {
      std::string type;
      ls >> type;
      c.trace.push_back(parse_trace(type, parse_fields(ls)));
      continue;
    }
    if (key == "tree") {
      std::size_t a = 0, b = 0;
      if (!(ls >> a >> b))
        throw InputError("certificate: malformed tree line '" + line + "'");
      edges.emplace_back(static_cast<VertexId>(a), static_cast<VertexId>(b));
      continue;
    }
    if (!(ls >> value))
      throw InputError("certificate: missing value for '" + key + "'");
    if (key == "graph.v")
      c.v = to_size(value);
    else if (key == "graph.e")
      c.e = to_size(value);
    else if (key == "graph.s")
      c.s = to_size(value);
    else if (key == "graph.t")
      c.t = to_size(value);
    else if (key == "bound.num")
      num = to_int(value);
    else if (key == "bound.den")
      den = to_int(value);
    else if (key == "min_leaves")
      c.min_leaves = to_int(value);
    else if (key == "leaves")
      c.leaves = to_size(value);
    else if (key == "verified")
      c.verified = to_bool(value);
    else if (key == "trace.count")
      trace_count = to_size(value);
    else if (key == "tree.count")
      tree_count = to_size(value);
    else
      throw InputError("certificate: unknown key '" + key + "'");
  }
  if (den <= 0)
    throw InputError("certificate: bound denominator must be positive");
  c.bound = Rational(num, den);
  if (c.trace.size() != trace_count || edges.size() != tree_count)
    throw InputError("certificate: record counts do not match");
  c.tree = make_forest(std::move(edges));
  return c;
}

Certificate parse_certificate_text(const std::string &text) {
  std::istringstream in(text);
  return parse_certificate(in);
}

} // namespace leafbound
