#include <stdexcept>

#include "doctest.h"
#include "support.hpp"
#include "ted/edit_script.hpp"
#include "ted/generators.hpp"
#include "ted/treeio.hpp"

using namespace ted;

namespace {

const CostModel kUnit = unit_model();

long long op_cost(const EditOp& op, const CostModel& m) {
  switch (op.kind) {
    case EditOpKind::delete_f: return m.del(op.from_label);
    case EditOpKind::delete_g: return m.del(op.to_label);
    case EditOpKind::relabel: return m.rel(op.from_label, op.to_label);
  }
  return 0;
}

void check_script(const Tree& f, const Tree& g, const CostModel& m,
                  const EditScript& s, long long want_cost) {
  CHECK(s.total_cost == want_cost);
  long long sum = 0;
  for (const EditOp& op : s.ops) sum += op_cost(op, m);
  CHECK(sum == want_cost);
  CHECK(trees_equal(apply_script(f, s), g));
}

}  // namespace

TEST_CASE("relabel only") {
  const Tree f = parse_bracket("a(b,c)");
  const Tree g = parse_bracket("a(c,d)");
  const EditScript s = edit_script(f, g, kUnit);
  check_script(f, g, kUnit, s, 2);
  CHECK(s.ops.size() == 2u);
  CHECK(s.ops[0].kind == EditOpKind::relabel);
  CHECK(s.ops[0].from_label == "b");
  CHECK(s.ops[0].to_label == "c");
}

TEST_CASE("identical trees give an empty script") {
  const Tree t = parse_bracket("a(b(c),d)");
  const EditScript s = edit_script(t, t, kUnit);
  CHECK(s.ops.empty());
  CHECK(s.total_cost == 0);
  CHECK(trees_equal(apply_script(t, s), t));
}

TEST_CASE("pure deletions") {
  const Tree f = parse_bracket("a(b(c),d)");
  const Tree g = parse_bracket("a(c)");
  const EditScript s = edit_script(f, g, kUnit);
  check_script(f, g, kUnit, s, 2);
  for (const EditOp& op : s.ops) CHECK(op.kind == EditOpKind::delete_f);
}

TEST_CASE("pure insertions come back as second-tree deletions") {
  const Tree f = parse_bracket("a(c)");
  const Tree g = parse_bracket("a(b(c),d)");
  const EditScript s = edit_script(f, g, kUnit);
  check_script(f, g, kUnit, s, 2);
  for (const EditOp& op : s.ops) CHECK(op.kind == EditOpKind::delete_g);
}

TEST_CASE("empty endpoints") {
  const Tree t = parse_bracket("a(b)");
  const EditScript del_all = edit_script(t, Tree{}, kUnit);
  CHECK(del_all.total_cost == 2);
  CHECK(trees_equal(apply_script(t, del_all), Tree{}));
  const EditScript ins_all = edit_script(Tree{}, t, kUnit);
  CHECK(ins_all.total_cost == 2);
  CHECK(trees_equal(apply_script(Tree{}, ins_all), t));
}

TEST_CASE("scripts replay for every algorithm on random pairs") {
  std::mt19937_64 rng(19);
  for (int it = 0; it < 30; ++it) {
    const Tree f = tedtest::random_tree(rng, 1 + tedtest::pick(rng, 25), 3);
    const Tree g = tedtest::random_tree(rng, 1 + tedtest::pick(rng, 25), 3);
    const long long want = distance_dmrw(f, g, kUnit).cost;
    for (Algo algo : {Algo::shasha_zhang, Algo::klein, Algo::dmrw})
      check_script(f, g, kUnit, edit_script(f, g, kUnit, algo), want);
  }
}

TEST_CASE("scripts replay under a seeded strategy run") {
  std::mt19937_64 rng(29);
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    const Tree f = tedtest::random_tree(rng, 1 + tedtest::pick(rng, 18), 3);
    const Tree g = tedtest::random_tree(rng, 1 + tedtest::pick(rng, 18), 3);
    DistanceEngine e(f, g, kUnit);
    const long long cost = e.run(random_strategy(seed));
    check_script(f, g, kUnit, e.extract_script(), cost);
  }
}

TEST_CASE("scripts respect custom costs") {
  CostTable t;
  t.del_default = 2;
  t.rel_default_eq = 0;
  t.rel_default_neq = 5;  // relabels priced out
  const CostModel m = from_table(t);
  const Tree f = parse_bracket("a(x)");
  const Tree g = parse_bracket("a(y)");
  const EditScript s = edit_script(f, g, m);
  check_script(f, g, m, s, 4);
  CHECK(s.ops.size() == 2u);  // delete x, insert y
}

TEST_CASE("charged diagonal still replays") {
  CostTable t;
  t.del_default = 1;
  t.rel_default_eq = 0;
  t.rel_default_neq = 1;
  t.rel_overrides[{"a", "a"}] = 3;
  const CostModel m = from_table(t);
  const Tree f = parse_bracket("a(b)");
  const Tree g = parse_bracket("a(b)");
  const EditScript s = edit_script(f, g, m);
  check_script(f, g, m, s, 2);  // cheaper to delete and insert the root
}

TEST_CASE("extract before run throws") {
  DistanceEngine e(parse_bracket("a"), parse_bracket("b"), kUnit);
  CHECK_THROWS_AS(e.extract_script(), std::logic_error);
}

TEST_CASE("hand-built shapeless scripts splice") {
  const Tree f = parse_bracket("a(b(c,d),e)");
  EditScript s;
  s.ops.push_back(EditOp{EditOpKind::delete_f, 1, -1, "b", ""});
  const Tree spliced = apply_script(f, s);
  CHECK(trees_equal(spliced, parse_bracket("a(c,d,e)")));

  EditScript r;
  r.ops.push_back(EditOp{EditOpKind::relabel, 4, -1, "e", "z"});
  CHECK(trees_equal(apply_script(f, r), parse_bracket("a(b(c,d),z)")));

  const EditScript nothing;
  CHECK(trees_equal(apply_script(f, nothing), f));
}

TEST_CASE("shapeless script errors") {
  const Tree f = parse_bracket("a(b,c)");
  EditScript bad;
  bad.ops.push_back(EditOp{EditOpKind::delete_f, 7, -1, "x", ""});
  CHECK_THROWS_WITH_AS(apply_script(f, bad), "dangling node reference",
                       std::invalid_argument);

  EditScript twice;
  twice.ops.push_back(EditOp{EditOpKind::delete_f, 1, -1, "b", ""});
  twice.ops.push_back(EditOp{EditOpKind::relabel, 1, -1, "b", "q"});
  CHECK_THROWS_WITH_AS(apply_script(f, twice), "node edited twice",
                       std::invalid_argument);

  EditScript insert;
  insert.ops.push_back(EditOp{EditOpKind::delete_g, -1, 0, "", "x"});
  CHECK_THROWS_WITH_AS(apply_script(f, insert),
                       "script has insertions but no target shape",
                       std::invalid_argument);

  // Deleting the root while children remain cannot stay a tree.
  EditScript root_del;
  root_del.ops.push_back(EditOp{EditOpKind::delete_f, 0, -1, "a", ""});
  CHECK_THROWS_WITH_AS(apply_script(f, root_del),
                       "deleting the root leaves a forest", std::invalid_argument);
}

TEST_CASE("shaped script must cover the first tree") {
  const Tree f = parse_bracket("a(b)");
  const Tree g = parse_bracket("a");
  EditScript s = edit_script(f, g, kUnit);
  s.ops.clear();  // drop the delete that covered node b
  CHECK_THROWS_WITH_AS(apply_script(f, s), "script does not cover the first tree",
                       std::invalid_argument);
}

TEST_CASE("base case deletions come out in preorder") {
  const Tree f = parse_bracket("r(a(b),c)");
  const EditScript s = edit_script(f, Tree{}, kUnit);
  CHECK(s.ops.size() == 4u);
  CHECK(s.ops[0].from_label == "r");
  CHECK(s.ops[1].from_label == "a");
  CHECK(s.ops[2].from_label == "b");
  CHECK(s.ops[3].from_label == "c");
}
