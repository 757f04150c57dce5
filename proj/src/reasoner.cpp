#include "ontotdd/reasoner.hpp"

#include <algorithm>
#include <cassert>
#include <tuple>

namespace ontotdd {

namespace {

using Clock = std::chrono::steady_clock;

struct TimeGuard {
  std::chrono::nanoseconds& sink;
  Clock::time_point t0 = Clock::now();
  ~TimeGuard() { sink += Clock::now() - t0; }
};

}  // namespace

struct Reasoner::Impl {
  // --- normalized (NNF) expressions, interned ---
  enum class K : std::uint8_t {
    Named,
    NegNamed,
    Thing,
    Nothing,
    And,
    Or,
    Some,
    All,
    HasSelf,
    NegHasSelf,
  };
  struct NExpr {
    K kind;
    int atom = -1;  // Named / NegNamed: class id
    int role = -1;  // Some / All / HasSelf / NegHasSelf
    std::vector<int> kids;
  };

  const Ontology onto;  // bound by value: later mutation of the source is invisible
  ReasonerLimits limits;
  ReasonerTimings timings;
  RunInfo run_info;

  std::vector<NExpr> exprs;
  std::map<std::tuple<int, int, int, std::vector<int>>, int> expr_index;

  std::map<Iri, int> class_ids;
  std::vector<Iri> class_names;
  std::map<Iri, int> prop_ids;
  std::vector<Iri> prop_names;
  std::map<Iri, int> ind_ids;
  std::vector<Iri> ind_names;

  // role id r = 2 * property id + (1 if inverse); inv(r) == r ^ 1
  std::vector<std::vector<int>> role_supers;  // r -> all s with r subsumed-by* s (incl. r)
  std::vector<char> role_trans, role_func, role_asym, role_irr, role_refl, role_composite;
  struct ChainRule {
    std::vector<int> seq;
    int sup;
  };
  std::vector<ChainRule> chain_rules;
  std::size_t max_chain_len = 0;
  std::vector<std::pair<int, int>> domain_rules;  // role -> label expr at edge source

  std::map<int, std::vector<int>> unfold_pos;  // fired by Named(atom)
  std::map<int, std::vector<int>> unfold_neg;  // fired by NegNamed(atom)
  std::vector<int> globals;                    // added to every node

  std::vector<std::pair<int, int>> asserted_labels;  // (individual, expr)
  struct AssertedEdge {
    int subj, obj, role;
  };
  std::vector<AssertedEdge> asserted_edges;
  std::vector<std::pair<int, int>> asserted_distinct;

  std::optional<bool> consistency_memo;
  std::map<int, bool> sat_cache;
  int fresh_class_counter = 0;
  long long step_counter = 0;

  explicit Impl(const Ontology& o, ReasonerLimits lim) : onto(o), limits(lim) { build(); }

  // --- name interning ---

  int class_id(const Iri& n) {
    auto it = class_ids.find(n);
    if (it != class_ids.end()) return it->second;
    int id = static_cast<int>(class_names.size());
    class_names.push_back(n);
    class_ids.emplace(n, id);
    return id;
  }

  void ensure_roles(int upto) {
    while (static_cast<int>(role_supers.size()) <= upto) {
      int r = static_cast<int>(role_supers.size());
      role_supers.push_back({r});
      role_trans.push_back(0);
      role_func.push_back(0);
      role_asym.push_back(0);
      role_irr.push_back(0);
      role_refl.push_back(0);
      role_composite.push_back(0);
    }
  }

  int prop_id(const Iri& n) {
    auto it = prop_ids.find(n);
    if (it != prop_ids.end()) return it->second;
    int id = static_cast<int>(prop_names.size());
    prop_names.push_back(n);
    prop_ids.emplace(n, id);
    ensure_roles(2 * id + 1);
    return id;
  }

  int rid(const PropertyExpression& pe) {
    return 2 * prop_id(pe.name()) + (pe.is_inverse() ? 1 : 0);
  }
  static int inv(int r) { return r ^ 1; }

  std::string role_str(int r) const {
    return prop_names[r / 2].str() + ((r & 1) ? "^-" : "");
  }

  int ind_id(const Iri& n) {
    auto it = ind_ids.find(n);
    if (it != ind_ids.end()) return it->second;
    int id = static_cast<int>(ind_names.size());
    ind_names.push_back(n);
    ind_ids.emplace(n, id);
    return id;
  }

  // --- expression interning ---

  int intern(NExpr e) {
    auto key = std::make_tuple(static_cast<int>(e.kind), e.atom, e.role, e.kids);
    auto it = expr_index.find(key);
    if (it != expr_index.end()) return it->second;
    if ((e.kind == K::HasSelf || e.kind == K::NegHasSelf) && role_composite[e.role])
      throw ReasonerError("non-simple property '" + role_str(e.role) + "' in ObjectHasSelf");
    int id = static_cast<int>(exprs.size());
    exprs.push_back(std::move(e));
    expr_index.emplace(std::move(key), id);
    return id;
  }

  // lookup without creating (and without simplicity checks); -1 if unseen
  int find_expr(const NExpr& e) const {
    auto key = std::make_tuple(static_cast<int>(e.kind), e.atom, e.role, e.kids);
    auto it = expr_index.find(key);
    return it == expr_index.end() ? -1 : it->second;
  }

  int mk_named(int atom) { return intern({K::Named, atom, -1, {}}); }
  int mk_neg_named(int atom) { return intern({K::NegNamed, atom, -1, {}}); }
  int mk_thing() { return intern({K::Thing, -1, -1, {}}); }
  int mk_nothing() { return intern({K::Nothing, -1, -1, {}}); }
  int mk_and(std::vector<int> kids) { return intern({K::And, -1, -1, std::move(kids)}); }
  int mk_or(std::vector<int> kids) { return intern({K::Or, -1, -1, std::move(kids)}); }
  int mk_some(int role, int kid) { return intern({K::Some, -1, role, {kid}}); }
  int mk_all(int role, int kid) { return intern({K::All, -1, role, {kid}}); }

  int nnf(const ClassPtr& ce, bool positive) {
    switch (ce->kind()) {
      case ClassKind::Named: {
        int a = class_id(ce->name());
        return positive ? mk_named(a) : mk_neg_named(a);
      }
      case ClassKind::Thing:
        return positive ? mk_thing() : mk_nothing();
      case ClassKind::Nothing:
        return positive ? mk_nothing() : mk_thing();
      case ClassKind::Complement:
        return nnf(ce->arg(), !positive);
      case ClassKind::Intersection:
      case ClassKind::Union: {
        bool conj = (ce->kind() == ClassKind::Intersection) == positive;
        std::vector<int> kids;
        kids.reserve(ce->args().size());
        for (const auto& a : ce->args()) kids.push_back(nnf(a, positive));
        return conj ? mk_and(std::move(kids)) : mk_or(std::move(kids));
      }
      case ClassKind::SomeValuesFrom:
      case ClassKind::AllValuesFrom: {
        bool some = (ce->kind() == ClassKind::SomeValuesFrom) == positive;
        int r = rid(ce->property());
        int kid = nnf(ce->arg(), positive);
        return some ? mk_some(r, kid) : mk_all(r, kid);
      }
      case ClassKind::HasSelf: {
        int r = rid(ce->property());
        return intern({positive ? K::HasSelf : K::NegHasSelf, -1, r, {}});
      }
    }
    throw ReasonerError("unreachable class expression kind");
  }

  int fresh_probe_class() {
    Iri n("urn:ontotdd:probe:Q" + std::to_string(fresh_class_counter++));
    return mk_named(class_id(n));
  }

  // --- construction: role tables, unfolding index, ABox image ---

  void build() {
    // Pass 1: stable ids for every name, in axiom insertion order.
    for (const auto& ax : onto.axioms()) {
      Vocabulary v;
      collect_vocabulary(ax, v);
      for (const auto& n : v.classes) class_id(n);
      for (const auto& n : v.properties) prop_id(n);
      for (const auto& n : v.individuals) ind_id(n);
    }

    int nroles = static_cast<int>(role_supers.size());
    std::vector<std::vector<char>> sub(nroles, std::vector<char>(nroles, 0));
    for (int r = 0; r < nroles; ++r) sub[r][r] = 1;
    auto add_sub = [&](int a, int b) {
      sub[a][b] = 1;
      sub[inv(a)][inv(b)] = 1;
    };

    std::vector<const SubPropertyChainOfAxiom*> declared_chains;

    for (const auto& ax : onto.axioms()) {
      if (const auto* x = std::get_if<SubObjectPropertyOfAxiom>(&ax)) {
        add_sub(rid(x->sub), rid(x->sup));
      } else if (const auto* x = std::get_if<EquivalentObjectPropertiesAxiom>(&ax)) {
        add_sub(rid(x->lhs), rid(x->rhs));
        add_sub(rid(x->rhs), rid(x->lhs));
      } else if (const auto* x = std::get_if<InverseObjectPropertiesAxiom>(&ax)) {
        int r = 2 * prop_id(x->first), s = 2 * prop_id(x->second);
        add_sub(r, inv(s));
        add_sub(inv(s), r);
      } else if (const auto* x = std::get_if<CharacteristicAxiom>(&ax)) {
        int r = rid(x->prop);
        switch (x->kind) {
          case CharacteristicKind::Symmetric: add_sub(r, inv(r)); break;
          case CharacteristicKind::Transitive:
            role_trans[r] = role_trans[inv(r)] = 1;
            chain_rules.push_back({{r, r}, r});
            chain_rules.push_back({{inv(r), inv(r)}, inv(r)});
            break;
          case CharacteristicKind::Functional: role_func[r] = 1; break;
          case CharacteristicKind::InverseFunctional: role_func[inv(r)] = 1; break;
          case CharacteristicKind::Asymmetric: role_asym[r] = role_asym[inv(r)] = 1; break;
          case CharacteristicKind::Irreflexive: role_irr[r] = role_irr[inv(r)] = 1; break;
          case CharacteristicKind::Reflexive: role_refl[r] = role_refl[inv(r)] = 1; break;
        }
      } else if (const auto* x = std::get_if<SubPropertyChainOfAxiom>(&ax)) {
        declared_chains.push_back(x);
        std::vector<int> seq;
        for (const auto& p : x->chain) seq.push_back(rid(p));
        int s = rid(x->sup);
        chain_rules.push_back({seq, s});
        std::vector<int> mirror(seq.rbegin(), seq.rend());
        for (int& q : mirror) q = inv(q);
        chain_rules.push_back({std::move(mirror), inv(s)});
      }
    }

    // reflexive-transitive closure of role subsumption
    for (int k = 0; k < nroles; ++k)
      for (int i = 0; i < nroles; ++i)
        if (sub[i][k])
          for (int j = 0; j < nroles; ++j)
            if (sub[k][j]) sub[i][j] = 1;
    for (int r = 0; r < nroles; ++r) {
      role_supers[r].clear();
      for (int s = 0; s < nroles; ++s)
        if (sub[r][s]) role_supers[r].push_back(s);
    }

    check_regularity(declared_chains);

    // composite roles: chain targets and everything above them
    for (const auto& c : chain_rules) {
      max_chain_len = std::max(max_chain_len, c.seq.size());
      for (int s : role_supers[c.sup]) role_composite[s] = 1;
    }
    for (const auto& ax : onto.axioms()) {
      if (const auto* x = std::get_if<CharacteristicAxiom>(&ax)) {
        int r = rid(x->prop);
        bool needs_simple = x->kind == CharacteristicKind::Functional ||
                            x->kind == CharacteristicKind::InverseFunctional ||
                            x->kind == CharacteristicKind::Asymmetric ||
                            x->kind == CharacteristicKind::Irreflexive;
        if (needs_simple && role_composite[r])
          throw ReasonerError("non-simple property '" + role_str(r) + "' declared " +
                              to_string(x->kind));
      }
    }

    // TBox: lazy unfolding for named left-hand sides, global disjunctions
    // for complex GCIs.
    auto absorb = [&](const ClassPtr& lhs, const ClassPtr& rhs) {
      // one inclusion lhs (subsumed by) rhs
      if (lhs->kind() == ClassKind::Named) {
        unfold_pos[class_id(lhs->name())].push_back(nnf(rhs, true));
      } else if (lhs->kind() == ClassKind::Thing) {
        globals.push_back(nnf(rhs, true));
      } else if (lhs->kind() == ClassKind::Nothing) {
        // vacuous
      } else {
        globals.push_back(mk_or({nnf(lhs, false), nnf(rhs, true)}));
      }
    };

    for (const auto& ax : onto.axioms()) {
      if (const auto* x = std::get_if<SubClassOfAxiom>(&ax)) {
        absorb(x->sub, x->sup);
      } else if (const auto* x = std::get_if<EquivalentClassesAxiom>(&ax)) {
        absorb(x->lhs, x->rhs);
        absorb(x->rhs, x->lhs);
      } else if (const auto* x = std::get_if<DisjointClassesAxiom>(&ax)) {
        if (x->lhs->kind() == ClassKind::Named) {
          unfold_pos[class_id(x->lhs->name())].push_back(nnf(x->rhs, false));
        } else if (x->rhs->kind() == ClassKind::Named) {
          unfold_pos[class_id(x->rhs->name())].push_back(nnf(x->lhs, false));
        } else {
          absorb(x->lhs, ClassExpression::complement_of(x->rhs));
        }
      } else if (const auto* x = std::get_if<ObjectPropertyDomainAxiom>(&ax)) {
        domain_rules.emplace_back(rid(x->prop), nnf(x->filler, true));
      } else if (const auto* x = std::get_if<ObjectPropertyRangeAxiom>(&ax)) {
        // Range(p, C) == Domain(inv(p), C); saturated edges carry both views.
        domain_rules.emplace_back(inv(rid(x->prop)), nnf(x->filler, true));
      } else if (const auto* x = std::get_if<ClassAssertionAxiom>(&ax)) {
        asserted_labels.emplace_back(ind_id(x->individual), nnf(x->expr, true));
      } else if (const auto* x = std::get_if<ObjectPropertyAssertionAxiom>(&ax)) {
        asserted_edges.push_back({ind_id(x->subject), ind_id(x->object), rid(x->prop)});
      } else if (const auto* x = std::get_if<DifferentIndividualsAxiom>(&ax)) {
        asserted_distinct.emplace_back(ind_id(x->first), ind_id(x->second));
      }
    }
  }

  // SROIQ-style regularity: a strict order must exist in which every chain
  // only uses smaller properties, except the sanctioned R.R->R and
  // prefix/suffix forms.
  void check_regularity(const std::vector<const SubPropertyChainOfAxiom*>& chains) {
    std::map<int, std::set<int>> prec;  // property-name precedence edges
    for (const auto* c : chains) {
      int s = prop_id(c->sup.name());
      std::vector<int> qs;
      for (const auto& p : c->chain) qs.push_back(prop_id(p.name()));
      std::size_t k = qs.size();
      bool self_first = qs.front() == s, self_last = qs.back() == s;
      for (std::size_t i = 0; i < k; ++i) {
        if (qs[i] == s) {
          bool allowed = (i == 0 && self_first && !self_last) ||
                         (i == k - 1 && self_last && !self_first) ||
                         (k == 2 && self_first && self_last);
          if (!allowed)
            throw ReasonerError("non-regular property chain for '" + prop_names[s].str() + "'");
        } else {
          prec[qs[i]].insert(s);
        }
      }
      if (k == 2 && self_first && self_last) continue;
      if (self_first && self_last)
        throw ReasonerError("non-regular property chain for '" + prop_names[s].str() + "'");
    }
    // cycle detection over precedence edges
    std::map<int, int> color;  // 0 white 1 grey 2 black
    std::vector<int> stack;
    auto dfs = [&](auto&& self, int u) -> bool {
      color[u] = 1;
      for (int v : prec[u]) {
        if (color[v] == 1) return false;
        if (color[v] == 0 && !self(self, v)) return false;
      }
      color[u] = 2;
      return true;
    };
    for (const auto& [u, _] : prec)
      if (color[u] == 0 && !dfs(dfs, u))
        throw ReasonerError("non-regular property chain: cyclic precedence over '" +
                            prop_names[u].str() + "'");
  }

  // --- completion graph ---

  struct Node {
    std::set<int> label;
    std::map<int, std::set<int>> out;  // neighbor -> saturated role set
    int parent = -1;
    bool root = false;
    bool alive = true;
  };

  struct Graph {
    std::vector<Node> nodes;
    std::set<std::pair<int, int>> distinct;
    std::map<int, int> ind_node;
    bool clash = false;
    bool blocking_hit = false;
    std::string clash_reason;
    // pending node visits; every mutation enqueues the nodes whose rules
    // could newly fire, so saturation never rescans the whole graph
    std::vector<int> queue;
    std::vector<char> queued;
    std::size_t qhead = 0;
  };

  static void touch(Graph& g, int x) {
    if (!g.nodes[x].alive || g.queued[x]) return;
    g.queued[x] = 1;
    g.queue.push_back(x);
  }

  static void set_clash(Graph& g, std::string why) {
    if (g.clash) return;
    g.clash = true;
    g.clash_reason = std::move(why);
  }

  static std::string short_name(const Iri& iri) {
    const std::string& s = iri.str();
    auto cut = s.find_last_of("#/");
    return cut == std::string::npos ? s : s.substr(cut + 1);
  }

  std::string role_text(int r) const {
    std::string s = short_name(prop_names[r >> 1]);
    return (r & 1) ? "ObjectInverseOf(" + s + ")" : s;
  }

  std::string expr_text(int e) const {
    const NExpr& ex = exprs[e];
    switch (ex.kind) {
      case K::Named: return short_name(class_names[ex.atom]);
      case K::NegNamed: return "ObjectComplementOf(" + short_name(class_names[ex.atom]) + ")";
      case K::Thing: return "owl:Thing";
      case K::Nothing: return "owl:Nothing";
      case K::HasSelf: return "ObjectHasSelf(" + role_text(ex.role) + ")";
      case K::NegHasSelf:
        return "ObjectComplementOf(ObjectHasSelf(" + role_text(ex.role) + "))";
      case K::Some:
      case K::All: {
        std::string s = ex.kind == K::Some ? "ObjectSomeValuesFrom(" : "ObjectAllValuesFrom(";
        return s + role_text(ex.role) + " " + expr_text(ex.kids[0]) + ")";
      }
      case K::And:
      case K::Or: {
        std::string s = ex.kind == K::And ? "ObjectIntersectionOf(" : "ObjectUnionOf(";
        for (std::size_t i = 0; i < ex.kids.size(); ++i)
          s += (i ? " " : "") + expr_text(ex.kids[i]);
        return s + ")";
      }
    }
    return "?";
  }

  std::string node_text(const Graph& g, int x) const {
    for (const auto& [ind, node] : g.ind_node)
      if (node == x) return short_name(ind_names[ind]);
    return "anonymous node " + std::to_string(x);
  }

  void check_deadline() const {
    if (limits.deadline && Clock::now() > *limits.deadline)
      throw ReasonerLimitError("reasoning deadline exceeded");
  }

  void check_limits(const Graph& g) {
    if (++step_counter % 64 == 0 && limits.deadline && Clock::now() > *limits.deadline)
      throw ReasonerLimitError("reasoning deadline exceeded");
    if (limits.max_steps && step_counter > static_cast<long long>(limits.max_steps))
      throw ReasonerLimitError("rule application budget exceeded");
    if (g.nodes.size() > limits.max_nodes)
      throw ReasonerLimitError("completion graph node ceiling exceeded");
  }

  void add_label(Graph& g, int x, int e) {
    Node& n = g.nodes[x];
    if (!n.label.insert(e).second) return;
    touch(g, x);
    const NExpr& ex = exprs[e];
    if (ex.kind == K::Nothing) set_clash(g, node_text(g, x) + ": owl:Nothing in label");
    if ((ex.kind == K::Named && n.label.count(mk_neg_named(ex.atom))) ||
        (ex.kind == K::NegNamed && n.label.count(mk_named(ex.atom))))
      set_clash(g, node_text(g, x) + ": " + short_name(class_names[ex.atom]) +
                       " and its complement");
    if (ex.kind == K::NegHasSelf) {
      auto it = n.out.find(x);
      if (it != n.out.end() && it->second.count(ex.role))
        set_clash(g, node_text(g, x) + ": self edge " + role_text(ex.role) +
                         " with " + expr_text(e));
    }
  }

  void add_edge(Graph& g, int x, int y, int r) {
    bool grew = false;
    for (int s : role_supers[r]) {
      grew |= g.nodes[x].out[y].insert(s).second;
      grew |= g.nodes[y].out[x].insert(inv(s)).second;
    }
    if (grew) {
      touch(g, x);
      touch(g, y);
      // a new edge can complete a chain starting a few hops upstream; the
      // edge may be traversed in either orientation, so walk from both ends
      if (max_chain_len > 1) {
        std::set<int> level{x, y};
        for (std::size_t hop = 1; hop < max_chain_len && !level.empty(); ++hop) {
          std::set<int> next;
          for (int u : level)
            for (const auto& [w, _] : g.nodes[u].out)
              if (g.nodes[w].alive && !next.count(w)) {
                touch(g, w);
                next.insert(w);
              }
          level = std::move(next);
        }
      }
    }
    // local clash conditions on the saturated labels
    for (int s : role_supers[r]) {
      if (x == y && (role_irr[s] || role_asym[s]))
        set_clash(g, node_text(g, x) + ": self edge on " +
                         (role_irr[s] ? "irreflexive " : "asymmetric ") + role_text(s));
      int neg_self = find_expr({K::NegHasSelf, -1, s, {}});
      if (x == y && neg_self != -1 && g.nodes[x].label.count(neg_self))
        set_clash(g, node_text(g, x) + ": self edge " + role_text(s) +
                         " with ObjectComplementOf(ObjectHasSelf(" + role_text(s) + "))");
      if (x != y && role_asym[s]) {
        auto it = g.nodes[y].out.find(x);
        if (it != g.nodes[y].out.end() && it->second.count(s))
          set_clash(g, node_text(g, x) + " and " + node_text(g, y) +
                           ": asymmetric " + role_text(s) + " in both directions");
      }
    }
  }

  int new_node(Graph& g, int parent, bool root) {
    if (g.nodes.size() >= limits.max_nodes)
      throw ReasonerLimitError("completion graph node ceiling exceeded");
    g.nodes.push_back(Node{});
    g.queued.push_back(0);
    int id = static_cast<int>(g.nodes.size() - 1);
    g.nodes[id].parent = parent;
    g.nodes[id].root = root;
    touch(g, id);
    for (int e : globals) add_label(g, id, e);
    for (int r = 0; r < static_cast<int>(role_refl.size()); ++r)
      if (role_refl[r] && (r & 1) == 0) add_edge(g, id, id, r);
    return id;
  }

  void add_distinct(Graph& g, int a, int b) {
    if (a == b) {
      set_clash(g, node_text(g, a) + ": equal to an individual declared different");
      return;
    }
    g.distinct.insert({std::min(a, b), std::max(a, b)});
  }

  bool are_distinct(const Graph& g, int a, int b) {
    return g.distinct.count({std::min(a, b), std::max(a, b)}) > 0;
  }

  // tree descendants of s (alive only)
  void collect_subtree(const Graph& g, int s, std::set<int>& out) {
    for (int i = 0; i < static_cast<int>(g.nodes.size()); ++i) {
      if (!g.nodes[i].alive) continue;
      int p = g.nodes[i].parent;
      if (p == s || out.count(p)) out.insert(i);
    }
    // parent ids always precede children, so one forward pass suffices
  }

  bool is_ancestor(const Graph& g, int anc, int x) {
    for (int p = g.nodes[x].parent; p != -1; p = g.nodes[p].parent)
      if (p == anc) return true;
    return false;
  }

  void merge(Graph& g, int s, int t) {
    if (s == t) return;
    // keep ancestors / roots as the merge target
    if (is_ancestor(g, s, t)) std::swap(s, t);
    else if (!is_ancestor(g, t, s)) {
      if (g.nodes[s].root && !g.nodes[t].root) std::swap(s, t);
      else if (g.nodes[s].root == g.nodes[t].root && s < t) std::swap(s, t);
    }
    if (are_distinct(g, s, t)) {
      set_clash(g, "functional merge of " + node_text(g, s) + " into " + node_text(g, t) +
                       " contradicts DifferentIndividuals");
      return;
    }

    std::set<int> doomed;
    collect_subtree(g, s, doomed);
    doomed.insert(s);

    // re-route s's edges that leave the doomed region
    std::vector<std::pair<int, std::vector<int>>> moved;
    for (const auto& [w, roles] : g.nodes[s].out) {
      if (doomed.count(w) && w != s) continue;
      moved.emplace_back(w == s ? t : w, std::vector<int>(roles.begin(), roles.end()));
    }

    for (int d : doomed) {
      for (const auto& [w, _] : g.nodes[d].out)
        if (!doomed.count(w)) {
          g.nodes[w].out.erase(d);
          touch(g, w);  // a satisfied existential may have lost its witness
        }
      g.nodes[d].out.clear();
      g.nodes[d].alive = false;
    }

    for (int e : std::set<int>(g.nodes[s].label))  // label was kept despite death
      add_label(g, t, e);
    for (auto& [w, roles] : moved)
      for (int r : roles) add_edge(g, t, w, r);

    // distinct pairs and ind_node only ever reference roots (the target
    // picker keeps roots alive), so fresh tableau nodes skip the remaps
    if (g.nodes[s].root) {
      std::vector<std::pair<int, int>> dpairs(g.distinct.begin(), g.distinct.end());
      g.distinct.clear();
      for (auto [a, b] : dpairs) {
        if (a == s) a = t;
        if (b == s) b = t;
        if (a == b) {
          set_clash(g, "functional merge of " + node_text(g, t) +
                           " contradicts DifferentIndividuals");
          return;
        }
        if (!doomed.count(a) && !doomed.count(b))
          g.distinct.insert({std::min(a, b), std::max(a, b)});
      }
      for (auto& [ind, node] : g.ind_node)
        if (node == s) node = t;
    }
    touch(g, t);
  }

  // pairwise (equality) ancestor blocking
  bool is_blocked(Graph& g, int x) {
    std::vector<int> path;  // root .. x
    for (int p = x; p != -1; p = g.nodes[p].parent) path.push_back(p);
    std::reverse(path.begin(), path.end());
    std::set<int> blocked_on_path;
    for (std::size_t i = 0; i < path.size(); ++i) {
      int z = path[i];
      if (g.nodes[z].root) continue;
      int zp = g.nodes[z].parent;
      for (std::size_t j = 0; j < i; ++j) {
        int y = path[j];
        if (g.nodes[y].root || blocked_on_path.count(y)) continue;
        int yp = g.nodes[y].parent;
        if (yp == -1) continue;
        if (g.nodes[z].label == g.nodes[y].label && g.nodes[zp].label == g.nodes[yp].label &&
            edge_roles(g, zp, z) == edge_roles(g, yp, y)) {
          blocked_on_path.insert(z);
          break;
        }
      }
      if (blocked_on_path.count(z)) {
        g.blocking_hit = true;
        return true;  // z blocked and z is x or an ancestor of x
      }
    }
    return false;
  }

  std::set<int> edge_roles(const Graph& g, int from, int to) {
    auto it = g.nodes[from].out.find(to);
    return it == g.nodes[from].out.end() ? std::set<int>{} : it->second;
  }

  // --- rule application, one node at a time ---

  // True when x has a Some in its label with no witnessing neighbor.
  bool has_open_existential(const Graph& g, int x) {
    for (int e : g.nodes[x].label) {
      const NExpr& ex = exprs[e];
      if (ex.kind != K::Some) continue;
      bool satisfied = false;
      for (const auto& [y, roles] : g.nodes[x].out)
        if (roles.count(ex.role) && g.nodes[y].label.count(ex.kids[0])) {
          satisfied = true;
          break;
        }
      if (!satisfied) return true;
    }
    return false;
  }

  // Applies every deterministic rule visible from x once. Changes re-queue
  // the affected nodes (including x itself), so the worklist drives the
  // fixpoint without whole-graph sweeps.
  void process(Graph& g, int x) {
    const std::vector<int> items(g.nodes[x].label.begin(), g.nodes[x].label.end());

    // unfolding, conjunctions, self loops
    for (int e : items) {
      if (g.clash) return;
      const NExpr& ex = exprs[e];
      const std::vector<int>* adds = nullptr;
      if (ex.kind == K::Named) {
        auto it = unfold_pos.find(ex.atom);
        if (it != unfold_pos.end()) adds = &it->second;
      } else if (ex.kind == K::NegNamed) {
        auto it = unfold_neg.find(ex.atom);
        if (it != unfold_neg.end()) adds = &it->second;
      } else if (ex.kind == K::And) {
        adds = &ex.kids;
      } else if (ex.kind == K::HasSelf) {
        if (!edge_roles(g, x, x).count(ex.role)) add_edge(g, x, x, ex.role);
        continue;
      } else if (ex.kind == K::NegHasSelf) {
        if (edge_roles(g, x, x).count(ex.role))
          set_clash(g, node_text(g, x) + ": self edge " + role_text(ex.role) + " with " +
                           expr_text(e));
        continue;
      }
      if (!adds) continue;
      for (int k : *adds) add_label(g, x, k);
    }
    if (g.clash) return;

    // universals over the current out edges, with the transitivity carry:
    // All(R,C) travels down transitive subroles of R as All(s,C)
    {
      std::vector<std::pair<int, std::set<int>>> out(g.nodes[x].out.begin(),
                                                     g.nodes[x].out.end());
      for (int e : items) {
        const NExpr& ex = exprs[e];
        if (ex.kind != K::All) continue;
        for (const auto& [y, roles] : out) {
          if (!g.nodes[y].alive) continue;
          if (roles.count(ex.role)) add_label(g, y, ex.kids[0]);
          for (int s : roles) {
            if (!role_trans[s]) continue;
            bool below = false;
            for (int t : role_supers[s])
              if (t == ex.role) below = true;
            if (below) add_label(g, y, mk_all(s, ex.kids[0]));
          }
          if (g.clash) return;
        }
      }
    }

    // domain / range triggers on the roles present at x
    if (!domain_rules.empty()) {
      std::set<int> present;
      for (const auto& [y, roles] : g.nodes[x].out) present.insert(roles.begin(), roles.end());
      for (const auto& [r, e] : domain_rules) {
        if (present.count(r)) add_label(g, x, e);
        if (g.clash) return;
      }
    }

    // chains starting at x
    for (const auto& rule : chain_rules) {
      std::set<int> frontier{x};
      for (int q : rule.seq) {
        std::set<int> next;
        for (int z : frontier)
          for (const auto& [y, roles] : g.nodes[z].out)
            if (g.nodes[y].alive && roles.count(q)) next.insert(y);
        frontier = std::move(next);
        if (frontier.empty()) break;
      }
      for (int y : frontier) {
        if (!edge_roles(g, x, y).count(rule.sup)) add_edge(g, x, y, rule.sup);
        if (g.clash) return;
      }
    }

    // functional merging; the merge reroutes edges and re-queues everything
    // it disturbs, so one merge per visit is enough
    for (int f = 0; f < static_cast<int>(role_func.size()); ++f) {
      if (!role_func[f]) continue;
      int first = -1;
      for (const auto& [y, roles] : g.nodes[x].out) {
        if (!roles.count(f)) continue;
        if (first == -1) {
          first = y;
          continue;
        }
        merge(g, y, first);
        return;
      }
    }
    if (g.clash) return;

    // existential generation, batched; x's blocking status only depends on
    // the path above it, so one check covers the whole batch
    bool blocked_known = false, blocked = false;
    for (int e : items) {
      const NExpr& ex = exprs[e];
      if (ex.kind != K::Some) continue;
      bool satisfied = false;
      for (const auto& [y, roles] : g.nodes[x].out)
        if (roles.count(ex.role) && g.nodes[y].label.count(ex.kids[0])) {
          satisfied = true;
          break;
        }
      if (satisfied) continue;
      if (!blocked_known) {
        blocked = !g.nodes[x].root && is_blocked(g, x);
        blocked_known = true;
      }
      if (blocked) break;  // no generating rules below a blocked node
      // a functional super-role with an existing witness forces the merge
      // anyway, so route the filler straight into that witness
      int z = -1;
      for (int f : role_supers[ex.role]) {
        if (!role_func[f]) continue;
        for (const auto& [y, roles] : g.nodes[x].out)
          if (g.nodes[y].alive && roles.count(f)) {
            z = y;
            break;
          }
        if (z != -1) break;
      }
      if (z == -1) z = new_node(g, x, false);
      add_label(g, z, ex.kids[0]);
      add_edge(g, x, z, ex.role);
      if (g.clash) return;
    }
  }

  // Drains the worklist, then retries generating rules at nodes that were
  // blocked earlier: label growth elsewhere can unblock them.
  bool saturate(Graph& g) {
    for (;;) {
      while (g.qhead < g.queue.size()) {
        if (g.clash) return false;
        int x = g.queue[g.qhead++];
        g.queued[x] = 0;
        if (!g.nodes[x].alive) continue;
        check_limits(g);
        process(g, x);
      }
      g.queue.clear();
      g.qhead = 0;
      if (g.clash) return false;
      bool retry = false;
      for (int x = 0; x < static_cast<int>(g.nodes.size()); ++x) {
        if (!g.nodes[x].alive || g.nodes[x].root) continue;
        if (has_open_existential(g, x) && !is_blocked(g, x)) {
          touch(g, x);
          retry = true;
        }
      }
      if (!retry) return true;
    }
  }

  // Deterministic saturation, then branch on the first unresolved union.
  bool expand(Graph& g, int depth) {
    if (depth > 10000) throw ReasonerLimitError("disjunction branching too deep");
    if (!saturate(g)) return false;

    for (int x = 0; x < static_cast<int>(g.nodes.size()); ++x) {
      if (!g.nodes[x].alive) continue;
      for (int e : g.nodes[x].label) {
        const NExpr& ex = exprs[e];
        if (ex.kind != K::Or) continue;
        bool satisfied = false;
        for (int k : ex.kids)
          if (g.nodes[x].label.count(k)) {
            satisfied = true;
            break;
          }
        if (satisfied) continue;
        std::string last_reason;
        for (int k : ex.kids) {
          Graph branch = g;
          add_label(branch, x, k);
          if (expand(branch, depth + 1)) {
            g = std::move(branch);
            return true;
          }
          last_reason = branch.clash_reason;
        }
        g.clash_reason = last_reason;  // trace from the final failed branch
        return false;
      }
    }
    return true;  // complete and clash-free
  }

  bool run(Graph& g) {
    step_counter = 0;  // the work budget is per top-level run
    bool ok = expand(g, 0);
    run_info.nodes = std::max(run_info.nodes, g.nodes.size());
    std::size_t alive = 0;
    for (const auto& n : g.nodes)
      if (n.alive) ++alive;
    run_info.alive_nodes = std::max(run_info.alive_nodes, alive);
    run_info.blocking_used = run_info.blocking_used || g.blocking_hit;
    return ok;
  }

  Graph base_graph() {
    Graph g;
    for (int i = 0; i < static_cast<int>(ind_names.size()); ++i) {
      int n = new_node(g, -1, true);
      g.ind_node[i] = n;
    }
    // interpretation domains are nonempty, so global axioms need a witness
    // node even when the ABox is empty
    if (g.nodes.empty()) new_node(g, -1, true);
    for (const auto& [ind, e] : asserted_labels) add_label(g, g.ind_node[ind], e);
    for (const auto& ae : asserted_edges) add_edge(g, g.ind_node[ae.subj], g.ind_node[ae.obj], ae.role);
    for (const auto& [a, b] : asserted_distinct) add_distinct(g, g.ind_node[a], g.ind_node[b]);
    return g;
  }

  // identify two individuals (for DifferentIndividuals entailment)
  Graph merged_graph(int ia, int ib) {
    Graph g;
    for (int i = 0; i < static_cast<int>(ind_names.size()); ++i) {
      if (i == ib) continue;
      int n = new_node(g, -1, true);
      g.ind_node[i] = n;
    }
    g.ind_node[ib] = g.ind_node[ia];
    for (const auto& [ind, e] : asserted_labels) add_label(g, g.ind_node[ind], e);
    for (const auto& ae : asserted_edges) add_edge(g, g.ind_node[ae.subj], g.ind_node[ae.obj], ae.role);
    for (const auto& [a, b] : asserted_distinct) add_distinct(g, g.ind_node[a], g.ind_node[b]);
    return g;
  }

  bool consistent() {
    if (consistency_memo) return *consistency_memo;
    run_info = RunInfo{};
    Graph g = base_graph();
    bool ok = run(g);
    consistency_memo = ok;
    if (!ok) witness = g.clash_reason.empty() ? "clash" : g.clash_reason;
    return ok;
  }

  std::string witness;

  bool sat_expr(int e) {
    auto it = sat_cache.find(e);
    if (it != sat_cache.end()) return it->second;
    Graph g;
    int n = new_node(g, -1, true);
    add_label(g, n, e);
    bool ok = run(g);
    sat_cache.emplace(e, ok);
    return ok;
  }

  bool subsumed(int c_expr, int neg_d_expr) { return !sat_expr(mk_and({c_expr, neg_d_expr})); }

  bool instance_of(int ind, int neg_expr) {
    Graph g = base_graph();
    add_label(g, g.ind_node[ind], neg_expr);
    return !run(g);
  }

  // --- probe graphs for property-axiom entailment (TBox/RBox active, no ABox) ---

  bool entails_role_sub(int sub_role, int sup_role) {
    Graph g;
    int x = new_node(g, -1, true);
    int y = new_node(g, -1, true);
    int q = fresh_probe_class();
    add_label(g, x, mk_all(sup_role, mk_neg_named(exprs[q].atom)));
    add_label(g, y, q);
    add_edge(g, x, y, sub_role);
    return !run(g);
  }

  bool entails_axiom(const Axiom& ax);
};

bool Reasoner::Impl::entails_axiom(const Axiom& ax) {
  if (!consistent()) return true;

  if (const auto* x = std::get_if<SubClassOfAxiom>(&ax))
    return subsumed(nnf(x->sub, true), nnf(x->sup, false));
  if (const auto* x = std::get_if<EquivalentClassesAxiom>(&ax))
    return subsumed(nnf(x->lhs, true), nnf(x->rhs, false)) &&
           subsumed(nnf(x->rhs, true), nnf(x->lhs, false));
  if (const auto* x = std::get_if<DisjointClassesAxiom>(&ax))
    return !sat_expr(mk_and({nnf(x->lhs, true), nnf(x->rhs, true)}));

  if (const auto* x = std::get_if<ObjectPropertyDomainAxiom>(&ax)) {
    Graph g;
    int a = new_node(g, -1, true);
    int b = new_node(g, -1, true);
    add_edge(g, a, b, rid(x->prop));
    add_label(g, a, nnf(x->filler, false));
    return !run(g);
  }
  if (const auto* x = std::get_if<ObjectPropertyRangeAxiom>(&ax)) {
    Graph g;
    int a = new_node(g, -1, true);
    int b = new_node(g, -1, true);
    add_edge(g, a, b, rid(x->prop));
    add_label(g, b, nnf(x->filler, false));
    return !run(g);
  }
  if (const auto* x = std::get_if<SubObjectPropertyOfAxiom>(&ax))
    return entails_role_sub(rid(x->sub), rid(x->sup));
  if (const auto* x = std::get_if<SubPropertyChainOfAxiom>(&ax)) {
    Graph g;
    std::vector<int> nodes{new_node(g, -1, true)};
    for (std::size_t i = 0; i < x->chain.size(); ++i) nodes.push_back(new_node(g, -1, true));
    for (std::size_t i = 0; i < x->chain.size(); ++i)
      add_edge(g, nodes[i], nodes[i + 1], rid(x->chain[i]));
    int q = fresh_probe_class();
    add_label(g, nodes.front(), mk_all(rid(x->sup), mk_neg_named(exprs[q].atom)));
    add_label(g, nodes.back(), q);
    return !run(g);
  }
  if (const auto* x = std::get_if<EquivalentObjectPropertiesAxiom>(&ax))
    return entails_role_sub(rid(x->lhs), rid(x->rhs)) &&
           entails_role_sub(rid(x->rhs), rid(x->lhs));
  if (const auto* x = std::get_if<InverseObjectPropertiesAxiom>(&ax)) {
    int r = 2 * prop_id(x->first), s = 2 * prop_id(x->second);
    return entails_role_sub(r, inv(s)) && entails_role_sub(inv(s), r);
  }
  if (const auto* x = std::get_if<CharacteristicAxiom>(&ax)) {
    int r = rid(x->prop);
    switch (x->kind) {
      case CharacteristicKind::Functional: {
        Graph g;
        int a = new_node(g, -1, true), b = new_node(g, -1, true), c = new_node(g, -1, true);
        add_edge(g, a, b, r);
        add_edge(g, a, c, r);
        add_distinct(g, b, c);
        return !run(g);
      }
      case CharacteristicKind::InverseFunctional: {
        Graph g;
        int a = new_node(g, -1, true), b = new_node(g, -1, true), c = new_node(g, -1, true);
        add_edge(g, b, a, r);
        add_edge(g, c, a, r);
        add_distinct(g, b, c);
        return !run(g);
      }
      case CharacteristicKind::Transitive: {
        Graph g;
        int a = new_node(g, -1, true), b = new_node(g, -1, true), c = new_node(g, -1, true);
        add_edge(g, a, b, r);
        add_edge(g, b, c, r);
        int q = fresh_probe_class();
        add_label(g, a, mk_all(r, mk_neg_named(exprs[q].atom)));
        add_label(g, c, q);
        return !run(g);
      }
      case CharacteristicKind::Symmetric: return entails_role_sub(r, inv(r));
      case CharacteristicKind::Asymmetric: {
        Graph g;
        int a = new_node(g, -1, true), b = new_node(g, -1, true);
        add_edge(g, a, b, r);
        add_edge(g, b, a, r);
        return !run(g);
      }
      case CharacteristicKind::Reflexive: {
        Graph g;
        int a = new_node(g, -1, true);
        int q = fresh_probe_class();
        add_label(g, a, mk_all(r, mk_neg_named(exprs[q].atom)));
        add_label(g, a, q);
        return !run(g);
      }
      case CharacteristicKind::Irreflexive: {
        Graph g;
        int a = new_node(g, -1, true);
        add_edge(g, a, a, r);
        return !run(g);
      }
    }
  }
  if (const auto* x = std::get_if<ClassAssertionAxiom>(&ax)) {
    int neg = nnf(x->expr, false);
    auto it = ind_ids.find(x->individual);
    if (it == ind_ids.end()) {
      // unknown individual: entailed iff the complement is globally unsatisfiable
      Graph g = base_graph();
      int n = new_node(g, -1, true);
      add_label(g, n, neg);
      return !run(g);
    }
    return instance_of(it->second, neg);
  }
  if (const auto* x = std::get_if<ObjectPropertyAssertionAxiom>(&ax)) {
    Graph g = base_graph();
    std::map<Iri, int> fresh;  // one constant per unknown name (R(a,a) needs one node)
    auto node_of = [&](const Iri& n) {
      auto it = ind_ids.find(n);
      if (it != ind_ids.end()) return g.ind_node[it->second];
      auto [fit, made] = fresh.try_emplace(n, -1);
      if (made) fit->second = new_node(g, -1, true);
      return fit->second;
    };
    int na = node_of(x->subject);
    int nb = node_of(x->object);
    int q = fresh_probe_class();
    add_label(g, na, mk_all(rid(x->prop), mk_neg_named(exprs[q].atom)));
    add_label(g, nb, q);
    return !run(g);
  }
  if (const auto* x = std::get_if<DifferentIndividualsAxiom>(&ax)) {
    auto ia = ind_ids.find(x->first), ib = ind_ids.find(x->second);
    if (ia == ind_ids.end() || ib == ind_ids.end()) return false;
    if (ia->second == ib->second) return false;
    Graph g = merged_graph(ia->second, ib->second);
    return !run(g);
  }
  throw ReasonerError("unsupported axiom form in entails()");
}

// --- public wrapper with timing attribution ---

namespace {

struct QueryGuard {
  ReasonerTimings& t;
  Clock::time_point t0 = Clock::now();
  std::chrono::nanoseconds cons0;
  explicit QueryGuard(ReasonerTimings& timings) : t(timings), cons0(timings.consistency) {}
  ~QueryGuard() {
    auto total = Clock::now() - t0;
    auto cons_delta = t.consistency - cons0;
    t.query += total - cons_delta;
  }
};

}  // namespace

Reasoner::Reasoner(const Ontology& onto, ReasonerLimits limits)
    : impl_(std::make_unique<Impl>(onto, limits)) {}

Reasoner::~Reasoner() = default;

bool Reasoner::check_consistency() {
  impl_->check_deadline();
  TimeGuard tg{impl_->timings.consistency};
  return impl_->consistent();
}

ConsistencyVerdict Reasoner::consistency_verdict() {
  ConsistencyVerdict v;
  v.consistent = check_consistency();
  if (!v.consistent) v.clash_witness = impl_->witness;
  return v;
}

bool Reasoner::is_satisfiable(const ClassPtr& ce) {
  impl_->check_deadline();
  QueryGuard qg(impl_->timings);
  {
    TimeGuard tg{impl_->timings.consistency};
    if (!impl_->consistent()) return false;  // no models at all
  }
  return impl_->sat_expr(impl_->nnf(ce, true));
}

bool Reasoner::entails(const Axiom& ax) {
  impl_->check_deadline();
  QueryGuard qg(impl_->timings);
  bool base;
  {
    TimeGuard tg{impl_->timings.consistency};
    base = impl_->consistent();
  }
  if (!base) return true;
  return impl_->entails_axiom(ax);
}

bool Reasoner::is_instance(const Iri& individual, const ClassPtr& ce) {
  return entails(Axiom{ClassAssertionAxiom{ce, individual}});
}

std::set<Iri> Reasoner::instances_of(const ClassPtr& ce) {
  if (!check_consistency()) throw InconsistentOntologyError("inconsistent ontology");
  std::set<Iri> out;
  for (const auto& ind : impl_->onto.vi())
    if (is_instance(ind, ce)) out.insert(ind);
  return out;
}

std::vector<std::pair<Iri, Iri>> Reasoner::entailed_property_assertions(
    const PropertyExpression& p, const std::optional<Iri>& subject,
    const std::optional<Iri>& object) {
  if (!check_consistency()) throw InconsistentOntologyError("inconsistent ontology");
  std::vector<std::pair<Iri, Iri>> out;
  std::vector<Iri> subjects, objects;
  if (subject)
    subjects.push_back(*subject);
  else
    subjects.assign(impl_->onto.vi().begin(), impl_->onto.vi().end());
  if (object)
    objects.push_back(*object);
  else
    objects.assign(impl_->onto.vi().begin(), impl_->onto.vi().end());
  for (const auto& s : subjects)
    for (const auto& o : objects)
      if (entails(Axiom{ObjectPropertyAssertionAxiom{p, s, o}})) out.emplace_back(s, o);
  return out;
}

std::set<Iri> Reasoner::unsatisfiable_classes() {
  if (!check_consistency()) throw InconsistentOntologyError("inconsistent ontology");
  TimeGuard tg{impl_->timings.consistency};
  std::set<Iri> out;
  for (const auto& c : impl_->onto.vc())
    if (!impl_->sat_expr(impl_->mk_named(impl_->class_id(c)))) out.insert(c);
  return out;
}

ClassHierarchy Reasoner::classify() {
  if (!check_consistency()) throw InconsistentOntologyError("inconsistent ontology");
  TimeGuard tg{impl_->timings.consistency};
  auto& I = *impl_;
  std::vector<Iri> names(I.onto.vc().begin(), I.onto.vc().end());
  ClassHierarchy h;

  std::map<Iri, bool> sat;
  for (const auto& c : names) sat[c] = I.sat_expr(I.mk_named(I.class_id(c)));

  // subsumption matrix over satisfiable classes
  auto subs = [&](const Iri& c, const Iri& d) {
    return I.subsumed(I.mk_named(I.class_id(c)), I.mk_neg_named(I.class_id(d)));
  };

  std::map<Iri, std::set<Iri>> strict_sup, equiv;
  for (const auto& c : names) {
    if (!sat[c]) continue;
    for (const auto& d : names) {
      if (c == d || !sat[d]) continue;
      bool cd = subs(c, d);
      if (!cd) continue;
      if (subs(d, c))
        equiv[c].insert(d);
      else
        strict_sup[c].insert(d);
    }
  }

  ClassInfo thing_info, nothing_info;
  for (const auto& c : names) {
    if (!sat[c]) {
      nothing_info.equivalents.insert(c);
      h[c] = ClassInfo{{nothing_iri()}, {}};
      for (const auto& d : names)
        if (!sat[d] && d != c) h[c].equivalents.insert(d);
      continue;
    }
    ClassInfo info;
    info.equivalents = equiv[c];
    bool top = !I.sat_expr(I.mk_neg_named(I.class_id(c)));  // Thing subsumed by c
    if (top) {
      info.equivalents.insert(thing_iri());
      thing_info.equivalents.insert(c);
    }
    // direct supers: minimal strict supers
    for (const auto& d : strict_sup[c]) {
      bool minimal = true;
      for (const auto& e : strict_sup[c]) {
        if (e == d || equiv[d].count(e)) continue;
        if (subs(e, d)) {  // e strictly below d
          minimal = false;
          break;
        }
      }
      if (minimal) info.direct_supers.insert(d);
    }
    if (info.direct_supers.empty() && !top) info.direct_supers.insert(thing_iri());
    h[c] = std::move(info);
  }
  h[thing_iri()] = std::move(thing_info);
  h[nothing_iri()] = std::move(nothing_info);
  return h;
}

const Ontology& Reasoner::ontology() const { return impl_->onto; }

const ReasonerTimings& Reasoner::timings() const { return impl_->timings; }
RunInfo Reasoner::last_run_info() const { return impl_->run_info; }

}  // namespace ontotdd
