#include "evencycle/classify.hpp"

#include <chrono>
#include <sstream>
#include <stdexcept>

#include "evencycle/parallel.hpp"

namespace evencycle {

CertificateKind kind_of(const Certificate& c) { return static_cast<CertificateKind>(c.index()); }

std::string_view kind_name(CertificateKind k) {
  switch (k) {
  case CertificateKind::LowDegreeVertex:
    return "LowDegreeVertex";
  case CertificateKind::Cycle4:
    return "Cycle4";
  case CertificateKind::Cycle8:
    return "Cycle8";
  case CertificateKind::InducedP10:
    return "InducedP10";
  }
  return "?";
}

std::vector<Vertex> witness_vertices(const Certificate& c) {
  struct {
    std::vector<Vertex> operator()(const LowDegreeVertex& l) const { return {l.vertex}; }
    std::vector<Vertex> operator()(const Cycle4& x) const { return x.cycle.verts; }
    std::vector<Vertex> operator()(const Cycle8& x) const { return x.cycle.verts; }
    std::vector<Vertex> operator()(const InducedP10& x) const { return x.path.verts; }
  } visitor;
  return std::visit(visitor, c);
}

namespace {

// The null graph has no vertex to certify and no cycle to find.
void require_vertices(const Graph& g) {
  if (g.order() == 0)
    throw UnsupportedSize("the null graph has no certificate");
}

} // namespace

Certificate classify(const Graph& g) {
  require_vertices(g);
  Certificate cert;
  if (auto v = low_degree_vertex(g)) {
    cert = LowDegreeVertex{*v, g.degree(*v)};
  } else if (auto c4 = find_cycle_of_length(g, 4)) {
    cert = Cycle4{*c4};
  } else if (auto c8 = g.order() >= 8 ? find_cycle_of_length(g, 8) : std::nullopt) {
    cert = Cycle8{*c8};
  } else if (auto p = g.order() >= 10 ? find_induced_path(g, 10) : std::nullopt) {
    cert = InducedP10{*p};
  } else {
    throw TheoremViolation();
  }
  if (!verify_certificate(g, cert))
    throw std::logic_error("classify produced a certificate that fails verification");
  return cert;
}

namespace {

// Deliberately plain loops over Graph::adjacent.

bool distinct_in_range(const Graph& g, const std::vector<Vertex>& vs) {
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (vs[i] < 0 || vs[i] >= g.order())
      return false;
    for (std::size_t j = 0; j < i; ++j)
      if (vs[i] == vs[j])
        return false;
  }
  return true;
}

bool raw_cycle(const Graph& g, const std::vector<Vertex>& vs, std::size_t len) {
  if (vs.size() != len || !distinct_in_range(g, vs))
    return false;
  for (std::size_t i = 0; i < len; ++i)
    if (!g.adjacent(vs[i], vs[(i + 1) % len]))
      return false;
  return true;
}

bool raw_induced_path(const Graph& g, const std::vector<Vertex>& vs, std::size_t len) {
  if (vs.size() != len || !distinct_in_range(g, vs))
    return false;
  for (std::size_t i = 0; i < len; ++i)
    for (std::size_t j = i + 1; j < len; ++j)
      if (g.adjacent(vs[i], vs[j]) != (j == i + 1))
        return false;
  return true;
}

int raw_degree(const Graph& g, Vertex v) {
  int d = 0;
  for (Vertex u = 0; u < g.order(); ++u)
    if (u != v && g.adjacent(v, u))
      ++d;
  return d;
}

} // namespace

bool verify_certificate(const Graph& g, const Certificate& cert) {
  struct {
    const Graph& g;
    bool operator()(const LowDegreeVertex& l) const {
      if (l.vertex < 0 || l.vertex >= g.order())
        return false;
      const int d = raw_degree(g, l.vertex);
      return d < 3 && d == l.degree;
    }
    bool operator()(const Cycle4& c) const { return raw_cycle(g, c.cycle.verts, 4); }
    bool operator()(const Cycle8& c) const { return raw_cycle(g, c.cycle.verts, 8); }
    bool operator()(const InducedP10& p) const { return raw_induced_path(g, p.path.verts, 10); }
  } visitor{g};
  return std::visit(visitor, cert);
}

Cycle find_c4_or_c8(const Graph& g) {
  require_vertices(g);
  if (auto v = low_degree_vertex(g))
    throw PreconditionFailed(PreconditionFailed::Kind::LowDegree,
                             "vertex " + std::to_string(*v) + " has degree " +
                                 std::to_string(g.degree(*v)),
                             *v);
  if (auto p = find_induced_path(g, 10))
    throw PreconditionFailed(PreconditionFailed::Kind::HasInducedP10, "graph has an induced P10",
                             *p);
  if (auto c = find_cycle_of_length(g, 4))
    return *c;
  if (auto c = find_cycle_of_length(g, 8))
    return *c;
  throw TheoremViolation();
}

bool GraphFilter::accepts(const Graph& g) const {
  if (min_degree > 0 && evencycle::min_degree(g) < min_degree)
    return false;
  if (cubic) {
    for (Vertex v = 0; v < g.order(); ++v)
      if (g.degree(v) != 3)
        return false;
  }
  if (connected && !is_connected(g))
    return false;
  if (p10_free && !is_p10_free(g))
    return false;
  return true;
}

std::string GraphFilter::describe() const {
  std::vector<std::string> parts;
  if (min_degree > 0)
    parts.push_back("min-degree=" + std::to_string(min_degree));
  if (connected)
    parts.emplace_back("connected");
  if (cubic)
    parts.emplace_back("cubic");
  if (p10_free)
    parts.emplace_back("p10-free");
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i)
    out += (i ? "," : "") + parts[i];
  return out;
}

GraphFilter GraphFilter::parse(std::string_view spec) {
  GraphFilter f;
  std::string token;
  std::istringstream in{std::string(spec)};
  while (std::getline(in, token, ',')) {
    if (token.empty())
      continue;
    if (token == "connected")
      f.connected = true;
    else if (token == "cubic")
      f.cubic = true;
    else if (token == "p10-free")
      f.p10_free = true;
    else if (token.starts_with("min-degree=")) {
      try {
        std::size_t used = 0;
        f.min_degree = std::stoi(token.substr(11), &used);
        if (used != token.size() - 11 || f.min_degree < 0)
          throw std::invalid_argument(token);
      } catch (const std::exception&) {
        throw std::invalid_argument("bad min-degree in filter: " + token);
      }
    } else {
      throw std::invalid_argument("unknown filter term: " + token);
    }
  }
  return f;
}

namespace {

enum class HuntOutcome { Filtered, Clean, Counterexample, Error };

struct HuntRecord {
  HuntOutcome outcome = HuntOutcome::Clean;
  std::string graph6;
  std::string reason;
};

bool spectrum_has_power_of_two(const std::set<int>& spec) {
  for (int len : spec)
    if (len >= 4 && (len & (len - 1)) == 0)
      return true;
  return false;
}

} // namespace

HuntResult hunt_power_of_two(const std::vector<std::string>& records, int kmax,
                             const GraphFilter& filter, int workers, std::uint64_t budget,
                             Graph6Options opts) {
  if (kmax < 4)
    throw std::invalid_argument("kmax must be at least 4");
  const auto start = std::chrono::steady_clock::now();
  auto results = ordered_map<HuntRecord>(records.size(), workers, [&](std::size_t i) {
    HuntRecord r;
    r.graph6 = records[i];
    try {
      Graph g = from_graph6(records[i], opts);
      if (!filter.accepts(g)) {
        r.outcome = HuntOutcome::Filtered;
        return r;
      }
      if (has_power_of_two_cycle(g, kmax)) {
        r.outcome = HuntOutcome::Clean;
        return r;
      }
      std::ostringstream why;
      why << "no cycle of length 2^k <= " << kmax;
      if (g.order() <= kHuntOracleCap) {
        auto spec = cycle_spectrum(g, std::min(kmax, g.order()), Budget{budget});
        if (spectrum_has_power_of_two(spec)) {
          r.outcome = HuntOutcome::Error;
          r.reason = "fixed-length search and spectrum oracle disagree";
          return r;
        }
        why << "; confirmed by exhaustive cycle spectrum";
      }
      r.outcome = HuntOutcome::Counterexample;
      r.reason = why.str();
    } catch (const BudgetExceeded& e) {
      r.outcome = HuntOutcome::Error;
      r.reason = std::string("budget-exceeded: ") + e.what();
    } catch (const Error& e) {
      r.outcome = HuntOutcome::Error;
      r.reason = std::string("input-error: ") + e.what();
    }
    return r;
  });

  HuntResult out;
  out.filter = filter.describe();
  out.kmax = kmax;
  for (std::size_t i = 0; i < results.size(); ++i) {
    auto& r = results[i];
    switch (r.outcome) {
    case HuntOutcome::Filtered:
      ++out.filtered_out;
      break;
    case HuntOutcome::Clean:
      ++out.examined;
      break;
    case HuntOutcome::Counterexample:
      ++out.examined;
      out.counterexamples.push_back({i, std::move(r.graph6), std::move(r.reason)});
      break;
    case HuntOutcome::Error:
      ++out.errors;
      out.record_errors.push_back({i, std::move(r.graph6), std::move(r.reason)});
      break;
    }
  }
  out.wall_time_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - start)
                         .count();
  return out;
}

} // namespace evencycle
