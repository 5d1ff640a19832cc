#include "qpl/identity.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cstdint>
#include <set>
#include <stdexcept>

#include "qpl/errors.hpp"
#include "qpl/parallel.hpp"

namespace qpl {

Term Term::variable(char name) {
  Term t;
  t.kind = Kind::kVar;
  t.var = name;
  return t;
}

Term Term::binary(TermOp op, Term lhs, Term rhs) {
  Term t;
  t.kind = Kind::kOp;
  t.op = op;
  t.children.push_back(std::move(lhs));
  t.children.push_back(std::move(rhs));
  return t;
}

namespace {

char op_char(TermOp op) {
  switch (op) {
    case TermOp::kMul: return '*';
    case TermOp::kLeftDiv: return '\\';
    case TermOp::kRightDiv: return '/';
  }
  return '?';
}

void collect_vars(const Term& t, std::set<char>& out) {
  if (t.kind == Term::Kind::kVar) {
    out.insert(t.var);
  } else {
    collect_vars(t.children[0], out);
    collect_vars(t.children[1], out);
  }
}

}  // namespace

std::string Term::str() const {
  if (kind == Kind::kVar) return std::string(1, var);
  return "(" + children[0].str() + op_char(op) + children[1].str() + ")";
}

int Term::occurrences(char name) const {
  if (kind == Kind::kVar) return var == name ? 1 : 0;
  return children[0].occurrences(name) + children[1].occurrences(name);
}

int evaluate_term(const Quasigroup& q, const Term& t,
                  const std::map<char, int>& assignment) {
  if (t.kind == Term::Kind::kVar) {
    const auto it = assignment.find(t.var);
    if (it == assignment.end()) {
      throw std::invalid_argument(std::string("unbound variable '") + t.var +
                                  "'");
    }
    return it->second;
  }
  const int a = evaluate_term(q, t.children[0], assignment);
  const int b = evaluate_term(q, t.children[1], assignment);
  switch (t.op) {
    case TermOp::kMul: return q.mul(a, b);
    case TermOp::kLeftDiv: return q.divide(Side::kLeft, a, b);
    case TermOp::kRightDiv: return q.divide(Side::kRight, a, b);
  }
  return 0;
}

IdentityParseError::IdentityParseError(std::size_t position,
                                       const std::string& message)
    : std::runtime_error("position " + std::to_string(position) + ": " +
                         message),
      position(position) {}

namespace {

// Recursive-descent parser for the identity grammar. Whitespace is allowed
// between any two tokens.
class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Term parse_term() {
    Term lhs = parse_atom();
    while (true) {
      skip_spaces();
      const char c = peek();
      TermOp op;
      if (c == '*') {
        op = TermOp::kMul;
      } else if (c == '\\') {
        op = TermOp::kLeftDiv;
      } else if (c == '/') {
        op = TermOp::kRightDiv;
      } else {
        return lhs;
      }
      ++pos_;
      Term rhs = parse_atom();
      lhs = Term::binary(op, std::move(lhs), std::move(rhs));
    }
  }

  void expect_equals() {
    skip_spaces();
    if (peek() != '=') fail("expected '='");
    ++pos_;
  }

  void expect_end() {
    skip_spaces();
    if (pos_ != text_.size()) fail("unexpected trailing input");
  }

 private:
  Term parse_atom() {
    skip_spaces();
    const char c = peek();
    if (c >= 'a' && c <= 'z') {
      ++pos_;
      // two adjacent atoms would be juxtaposition, which the grammar forbids
      peek_no_atom();
      return Term::variable(c);
    }
    const char closer = c == '(' ? ')' : c == '[' ? ']' : c == '{' ? '}' : 0;
    if (closer == 0) fail("expected a variable or an opening bracket");
    if (++depth_ > kMaxNesting) fail("brackets nested too deeply");
    ++pos_;
    Term inner = parse_term();
    skip_spaces();
    if (peek() != closer) {
      fail(std::string("expected '") + closer + "'");
    }
    ++pos_;
    --depth_;
    peek_no_atom();
    return inner;
  }

  void peek_no_atom() {
    skip_spaces();
    const char c = peek();
    if ((c >= 'a' && c <= 'z') || c == '(' || c == '[' || c == '{') {
      fail("missing operator (juxtaposition is not allowed)");
    }
  }

  void skip_spaces() {
    while (pos_ < text_.size() &&
           (text_[pos_] == ' ' || text_[pos_] == '\t')) {
      ++pos_;
    }
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  [[noreturn]] void fail(const std::string& message) const {
    throw IdentityParseError(pos_, message);
  }

  static constexpr int kMaxNesting = 64;

  std::string_view text_;
  std::size_t pos_ = 0;
  int depth_ = 0;
};

}  // namespace

Identity Identity::parse(std::string_view text) {
  Parser parser(text);
  Term lhs = parser.parse_term();
  parser.expect_equals();
  Term rhs = parser.parse_term();
  parser.expect_end();
  return Identity(std::move(lhs), std::move(rhs));
}

Identity::Identity(Term lhs, Term rhs)
    : lhs_(std::move(lhs)), rhs_(std::move(rhs)) {
  std::set<char> vars;
  collect_vars(lhs_, vars);
  collect_vars(rhs_, vars);
  vars_.assign(vars.begin(), vars.end());
  compile();
}

std::string Identity::str() const { return lhs_.str() + " = " + rhs_.str(); }

bool Identity::balanced() const {
  for (char v : vars_) {
    if (lhs_.occurrences(v) != 1 || rhs_.occurrences(v) != 1) return false;
  }
  return true;
}

namespace {

void flatten(const Term& t, const std::vector<char>& vars,
             std::vector<int>& program) {
  if (t.kind == Term::Kind::kVar) {
    const auto it = std::find(vars.begin(), vars.end(), t.var);
    program.push_back(static_cast<int>(it - vars.begin()));
    return;
  }
  flatten(t.children[0], vars, program);
  flatten(t.children[1], vars, program);
  switch (t.op) {
    case TermOp::kMul: program.push_back(-1); break;
    case TermOp::kLeftDiv: program.push_back(-2); break;
    case TermOp::kRightDiv: program.push_back(-3); break;
  }
}

}  // namespace

void Identity::compile() {
  lhs_program_.clear();
  rhs_program_.clear();
  flatten(lhs_, vars_, lhs_program_);
  flatten(rhs_, vars_, rhs_program_);
}

int Identity::eval_side(const Quasigroup& q, const std::vector<int>& program,
                        const int* values) const {
  // the parser caps bracket nesting at 64, which bounds the operand stack
  int stack[128];
  int top = 0;
  for (const int instr : program) {
    if (instr >= 0) {
      stack[top++] = values[instr];
      continue;
    }
    const int b = stack[--top];
    const int a = stack[top - 1];
    switch (instr) {
      case -1: stack[top - 1] = q.mul(a, b); break;
      case -2: stack[top - 1] = q.divide(Side::kLeft, a, b); break;
      default: stack[top - 1] = q.divide(Side::kRight, a, b); break;
    }
  }
  return stack[0];
}

std::optional<std::vector<int>> Identity::counterexample(const Quasigroup& q,
                                                         int workers) const {
  const int k = static_cast<int>(vars_.size());
  if (k > kMaxIdentityVariables) {
    throw BoundError("identity has " + std::to_string(k) +
                     " variables; bound is " +
                     std::to_string(kMaxIdentityVariables));
  }
  const int n = q.order();
  std::uint64_t total = 1;
  for (int i = 0; i < k; ++i) total *= static_cast<std::uint64_t>(n);

  std::atomic<std::uint64_t> best(UINT64_MAX);
  run_chunked(total, workers, [&](int, std::size_t begin, std::size_t end) {
    // odometer over assignments, most significant digit first so that the
    // index order is the lexicographic order of assignments
    std::vector<int> values(std::max(k, 1), 0);
    std::uint64_t rest = begin;
    for (int i = k - 1; i >= 0; --i) {
      values[i] = static_cast<int>(rest % n);
      rest /= n;
    }
    for (std::uint64_t index = begin; index < end; ++index) {
      if (index >= best.load(std::memory_order_relaxed)) break;
      if (eval_side(q, lhs_program_, values.data()) !=
          eval_side(q, rhs_program_, values.data())) {
        std::uint64_t seen = best.load(std::memory_order_relaxed);
        while (index < seen &&
               !best.compare_exchange_weak(seen, index,
                                           std::memory_order_relaxed)) {
        }
        break;
      }
      for (int i = k - 1; i >= 0; --i) {
        if (++values[i] < n) break;
        values[i] = 0;
      }
    }
  });

  const std::uint64_t found = best.load();
  if (found == UINT64_MAX) return std::nullopt;
  std::vector<int> values(k);
  std::uint64_t rest = found;
  for (int i = k - 1; i >= 0; --i) {
    values[i] = static_cast<int>(rest % n);
    rest /= n;
  }
  return values;
}

bool Identity::holds(const Quasigroup& q, int workers) const {
  return !counterexample(q, workers).has_value();
}

namespace {

const std::map<std::string_view, std::string_view>& builtin_sources() {
  static const std::map<std::string_view, std::string_view> sources = {
      {"assoc", "x*(y*z) = (x*y)*z"},
      {"comm", "x*y = y*x"},
      {"khalil1", "x*{z\\((z/u)*v)} = {(x*(z\\z))/u}*v"},
      {"khalil2", "x*{u\\((z/u)*v)} = {(x*(u\\z))/u}*v"},
      {"khalil3", "x*{z\\((u/u)*v)} = {(x*(z\\u))/u}*v"},
      {"khalil4", "x*(y\\(((y*y)/z)*u)) = ((x*(y\\(y*y)))/z)*u"},
      {"khalil5", "x*(y\\(((y*z)/y)*u)) = ((x*(y\\(y*z)))/y)*u"},
      {"khalil6", "x*(z\\(((y*y)/y)*u)) = ((x*(z\\(y*y)))/y)*u"},
  };
  return sources;
}

}  // namespace

const Identity& builtin_identity(std::string_view name) {
  static std::map<std::string_view, Identity>* parsed = [] {
    auto* out = new std::map<std::string_view, Identity>();
    for (const auto& [key, source] : builtin_sources()) {
      out->emplace(key, Identity::parse(source));
    }
    return out;
  }();
  const auto it = parsed->find(name);
  if (it == parsed->end()) {
    throw std::invalid_argument("unknown identity '" + std::string(name) +
                                "'");
  }
  return it->second;
}

std::vector<std::string_view> builtin_identity_names() {
  std::vector<std::string_view> names;
  for (const auto& [key, source] : builtin_sources()) names.push_back(key);
  return names;
}

std::array<bool, 6> khalil_suite(const Quasigroup& q) {
  if (q.order() > kKhalilSuiteOrderBound) {
    throw BoundError("khalil_suite: order exceeds bound " +
                     std::to_string(kKhalilSuiteOrderBound));
  }
  std::array<bool, 6> out{};
  static const std::array<std::string_view, 6> names = {
      "khalil1", "khalil2", "khalil3", "khalil4", "khalil5", "khalil6"};
  for (int i = 0; i < 6; ++i) {
    out[i] = builtin_identity(names[i]).holds(q);
  }
  return out;
}

std::optional<std::array<int, 3>> evans_counterexample(const Quasigroup& q,
                                                       const EvansWitness& w) {
  const int n = q.order();
  for (const Perm* perm : {&w.p[0], &w.p[1], &w.p[2], &w.p[3], &w.p[4],
                           &w.q[0], &w.q[1], &w.q[2], &w.q[3], &w.q[4]}) {
    if (perm->degree() != n) {
      throw std::invalid_argument("evans witness degree mismatch");
    }
  }
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      for (int z = 0; z < n; ++z) {
        const int lhs =
            w.p[4][q.mul(w.p[2][q.mul(w.p[0][x], w.p[1][y])], w.p[3][z])];
        const int rhs =
            w.q[4][q.mul(w.q[0][x], w.q[3][q.mul(w.q[1][y], w.q[2][z])])];
        if (lhs != rhs) return std::array<int, 3>{x, y, z};
      }
    }
  }
  return std::nullopt;
}

bool evans_check(const Quasigroup& q, const EvansWitness& w) {
  return !evans_counterexample(q, w).has_value();
}

EvansWitness evans_witness_from_group_isotopy(const IsotopismTriple& t) {
  const Perm id = Perm::identity(t.degree());
  const Perm ci = t.c.inverse();
  return EvansWitness{
      {t.a, t.b, ci.then(t.a), t.b, id},
      {t.a, t.a, t.b, ci.then(t.b), id},
  };
}

std::optional<EvansWitness> evans_search(const Quasigroup& q) {
  const int n = q.order();
  if (n > kEvansSearchOrderBound) {
    throw BoundError("evans_search: order exceeds bound " +
                     std::to_string(kEvansSearchOrderBound));
  }
  const std::vector<Perm> perms = all_perms(n);
  const int m = static_cast<int>(perms.size());
  const int cube = n * n * n;

  // value tables of the unpermuted cores, indexed by (x, y, z)
  auto core_table = [&](const Perm& f1, const Perm& f2, const Perm& f3,
                        const Perm& f4, bool left) {
    std::vector<int> out(cube);
    int i = 0;
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        for (int z = 0; z < n; ++z, ++i) {
          out[i] = left ? q.mul(f3[q.mul(f1[x], f2[y])], f4[z])
                        : q.mul(f1[x], f4[q.mul(f2[y], f3[z])]);
        }
      }
    }
    return out;
  };

  // all right-hand cores, reused across the outer loops
  std::vector<std::vector<int>> rhs_tables;
  std::vector<std::array<int, 4>> rhs_index;
  rhs_tables.reserve(static_cast<std::size_t>(m) * m * m * m);
  for (int q1 = 0; q1 < m; ++q1)
    for (int q2 = 0; q2 < m; ++q2)
      for (int q3 = 0; q3 < m; ++q3)
        for (int q4 = 0; q4 < m; ++q4) {
          rhs_tables.push_back(
              core_table(perms[q1], perms[q2], perms[q3], perms[q4], false));
          rhs_index.push_back({q1, q2, q3, q4});
        }

  for (int p1 = 0; p1 < m; ++p1) {
    for (int p2 = 0; p2 < m; ++p2) {
      for (int p3 = 0; p3 < m; ++p3) {
        for (int p4 = 0; p4 < m; ++p4) {
          const std::vector<int> lhs =
              core_table(perms[p1], perms[p2], perms[p3], perms[p4], true);
          for (std::size_t r = 0; r < rhs_tables.size(); ++r) {
            const std::vector<int>& rhs = rhs_tables[r];
            // force P5 from lhs value -> rhs value; must be a bijection
            std::vector<int> p5(n, -1);
            std::vector<bool> used(n, false);
            bool ok = true;
            for (int i = 0; i < cube && ok; ++i) {
              const int a = lhs[i];
              const int b = rhs[i];
              if (p5[a] == -1) {
                if (used[b]) {
                  ok = false;
                } else {
                  p5[a] = b;
                  used[b] = true;
                }
              } else if (p5[a] != b) {
                ok = false;
              }
            }
            if (!ok) continue;
            for (int a = 0; a < n; ++a) {
              if (p5[a] == -1) {
                // unused lhs value; send it to any free point
                for (int b = 0; b < n; ++b) {
                  if (!used[b]) {
                    p5[a] = b;
                    used[b] = true;
                    break;
                  }
                }
              }
            }
            const auto [q1, q2, q3, q4] = rhs_index[r];
            return EvansWitness{
                {perms[p1], perms[p2], perms[p3], perms[p4], Perm(p5)},
                {perms[q1], perms[q2], perms[q3], perms[q4],
                 Perm::identity(n)},
            };
          }
        }
      }
    }
  }
  return std::nullopt;
}

KhalilParastropheReport corollary_1_2_check(const Quasigroup& g) {
  KhalilParastropheReport report;
  if (!g.is_associative()) {
    report.precondition_failure = "argument is not associative";
    return report;
  }
  const std::array<ParastropheKind, 4> kinds = {
      ParastropheKind::kPi3, ParastropheKind::kPi4, ParastropheKind::kPi5,
      ParastropheKind::kPi6};
  for (std::size_t i = 0; i < kinds.size(); ++i) {
    report.holds[i] = khalil_suite(parastrophe(g, kinds[i]));
  }
  return report;
}

bool KhalilParastropheReport::all() const {
  if (precondition_failure) return false;
  for (const auto& row : holds) {
    for (bool b : row) {
      if (!b) return false;
    }
  }
  return true;
}

ParastropheEquivReport corollary_1_21_check(const Quasigroup& g) {
  ParastropheEquivReport report;
  if (!g.is_associative()) {
    report.precondition_failure = "argument is not associative";
    return report;
  }
  const std::array<std::pair<ParastropheKind, ParastropheKind>, 4> parts = {{
      {ParastropheKind::kPi1, ParastropheKind::kPi5},
      {ParastropheKind::kPi2, ParastropheKind::kPi3},
      {ParastropheKind::kPi1, ParastropheKind::kPi6},
      {ParastropheKind::kPi2, ParastropheKind::kPi4},
  }};
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const auto [src, tgt] = parts[i];
    const Quasigroup source = parastrophe(g, src);
    const Quasigroup target = parastrophe(g, tgt);
    report.parts[i] = ParastropheEquivCase{
        src, tgt, source == target, target.is_associative()};
  }
  return report;
}

bool ParastropheEquivReport::all_ok() const {
  return !precondition_failure &&
         std::all_of(parts.begin(), parts.end(),
                     [](const ParastropheEquivCase& c) { return c.ok(); });
}

}  // namespace qpl
