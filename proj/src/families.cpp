#include "harary/families.hpp"

#include <cctype>
#include <numeric>
#include <sstream>

namespace harary {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument("invalid family spec: " + what);
}

void check_total(int total) {
  require(total >= 1 && total <= kMaxVertices,
          "total vertex count must be in 1.." + std::to_string(kMaxVertices));
}

Graph complete(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph build(const family::Complete& f) {
  require(f.n >= 1, "complete(n) needs n >= 1");
  check_total(f.n);
  return complete(f.n);
}

Graph build(const family::EmptyComplement& f) {
  require(f.n >= 1, "empty(n) needs n >= 1");
  check_total(f.n);
  return Graph(f.n);
}

Graph build(const family::CompleteBipartite& f) {
  require(f.n1 >= 1 && f.n2 >= 1, "bipartite(n1,n2) needs n1,n2 >= 1");
  check_total(f.n1 + f.n2);
  return join(Graph(f.n1), Graph(f.n2));
}

Graph build(const family::Star& f) {
  require(f.n >= 1, "star(n) needs n >= 1");
  check_total(f.n);
  if (f.n == 1) return Graph(1);
  return join(Graph(1), Graph(f.n - 1));
}

Graph build(const family::SplitJoin& f) {
  require(f.s >= 1, "split_join needs s >= 1");
  require(!f.parts.empty(), "split_join needs at least one part");
  int total = f.s;
  for (int p : f.parts) {
    require(p >= 1, "split_join parts must be >= 1");
    total += p;
  }
  check_total(total);
  Graph tail = complete(f.parts[0]);
  for (std::size_t i = 1; i < f.parts.size(); ++i) {
    tail = disjoint_union(tail, complete(f.parts[i]));
  }
  return join(complete(f.s), tail);
}

Graph build(const family::PendantClique& f) {
  require(f.t >= 1, "pendant_clique needs t >= 1");
  require(static_cast<int>(f.pendants.size()) <= f.t,
          "pendant_clique supports at most t attachment vertices");
  int total = f.t;
  for (int r : f.pendants) {
    require(r >= 1, "pendant counts must be >= 1");
    total += r;
  }
  check_total(total);
  Graph g = complete(f.t);
  Graph out(total);
  for (auto [u, v] : g.edges()) out.add_edge(u, v);
  int next = f.t;
  for (std::size_t i = 0; i < f.pendants.size(); ++i) {
    for (int r = 0; r < f.pendants[i]; ++r) out.add_edge(static_cast<int>(i), next++);
  }
  return out;
}

Graph build(const family::CollapsedSplit& f) {
  require(f.s >= 1 && f.t >= 1 && f.k >= 3,
          "collapsed_split needs s >= 1, t >= 1, k >= 3");
  int total = f.s + (f.k - 1) + (2 * f.t + 1);
  check_total(total);
  Graph tail = disjoint_union(Graph(f.k - 1), complete(2 * f.t + 1));
  return join(complete(f.s), tail);
}

std::vector<int> parse_int_list(std::string_view text, const char* what) {
  std::vector<int> out;
  std::string buf(text);
  for (char& c : buf)
    if (c == ',') c = ' ';
  std::istringstream in(buf);
  int value = 0;
  while (in >> value) out.push_back(value);
  if (!in.eof()) throw std::invalid_argument(std::string("bad integer list in ") + what);
  return out;
}

}  // namespace

Graph generate(const FamilySpec& spec) {
  return std::visit([](const auto& f) { return build(f); }, spec);
}

FamilySpec parse_family(std::string_view text) {
  std::size_t open = text.find('(');
  if (open == std::string_view::npos || text.back() != ')') {
    throw std::invalid_argument("family spec must look like name(args)");
  }
  std::string name(text.substr(0, open));
  std::string_view args = text.substr(open + 1, text.size() - open - 2);

  std::size_t semi = args.find(';');
  std::vector<int> head = parse_int_list(
      semi == std::string_view::npos ? args : args.substr(0, semi), name.c_str());
  std::vector<int> tail;
  if (semi != std::string_view::npos) {
    tail = parse_int_list(args.substr(semi + 1), name.c_str());
  }

  auto expect = [&](std::size_t n_head, bool allow_tail) {
    if (head.size() != n_head || (!allow_tail && !tail.empty())) {
      throw std::invalid_argument("wrong arguments for family " + name);
    }
  };

  if (name == "complete") {
    expect(1, false);
    return family::Complete{head[0]};
  }
  if (name == "empty") {
    expect(1, false);
    return family::EmptyComplement{head[0]};
  }
  if (name == "bipartite") {
    expect(2, false);
    return family::CompleteBipartite{head[0], head[1]};
  }
  if (name == "star") {
    expect(1, false);
    return family::Star{head[0]};
  }
  if (name == "split_join") {
    expect(1, true);
    return family::SplitJoin{head[0], tail};
  }
  if (name == "pendant_clique") {
    expect(1, true);
    return family::PendantClique{head[0], tail};
  }
  if (name == "collapsed_split") {
    expect(3, false);
    return family::CollapsedSplit{head[0], head[1], head[2]};
  }
  throw std::invalid_argument("unknown family \"" + name + "\"");
}

namespace {

std::string list_str(const std::vector<int>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(xs[i]);
  }
  return out;
}

}  // namespace

std::string format_family(const FamilySpec& spec) {
  struct Visitor {
    std::string operator()(const family::Complete& f) {
      return "complete(" + std::to_string(f.n) + ")";
    }
    std::string operator()(const family::EmptyComplement& f) {
      return "empty(" + std::to_string(f.n) + ")";
    }
    std::string operator()(const family::CompleteBipartite& f) {
      return "bipartite(" + std::to_string(f.n1) + "," + std::to_string(f.n2) + ")";
    }
    std::string operator()(const family::Star& f) {
      return "star(" + std::to_string(f.n) + ")";
    }
    std::string operator()(const family::SplitJoin& f) {
      return "split_join(" + std::to_string(f.s) + "; " + list_str(f.parts) + ")";
    }
    std::string operator()(const family::PendantClique& f) {
      return "pendant_clique(" + std::to_string(f.t) + "; " + list_str(f.pendants) +
             ")";
    }
    std::string operator()(const family::CollapsedSplit& f) {
      return "collapsed_split(" + std::to_string(f.s) + "," + std::to_string(f.t) +
             "," + std::to_string(f.k) + ")";
    }
  };
  return std::visit(Visitor{}, spec);
}

}  // namespace harary
