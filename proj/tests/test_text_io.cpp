#include "doctest.h"
#include "succinct/circuit_builder.hpp"
#include "succinct/error.hpp"
#include "succinct/text_io.hpp"

using namespace succinct;

TEST_CASE("circuit text is exact and round trips") {
  const std::string text =
      "circuit maj\n"
      "inputs a b c\n"
      "outputs y\n"
      "gate ab = AND a b\n"
      "gate bc = AND b c\n"
      "gate ca = AND a c\n"
      "gate y = OR ab bc ca\n"
      "end\n";
  Circuit c = read_circuit(text);
  CHECK(write_circuit(c) == text);
  CHECK(c.size() == 10);
  CHECK(read_circuit("# comment\n\ncircuit k  # trailing\ninputs\noutputs t\ngate t = TRUE\nend") ==
        read_circuit("circuit k\ninputs\noutputs t\ngate t = TRUE\nend\n"));

  CHECK_THROWS_AS(read_circuit("circuit c\ninputs a\noutputs y\ngate y = AND a z\ngate z = NOT a\nend\n"), input_error);
  CHECK_THROWS_AS(read_circuit("circuit c\ninputs a\noutputs y\ngate y = XOR a a\nend\n"), input_error);
  CHECK_THROWS_AS(read_circuit("circuit c\ninputs a\noutputs y\ngate y NOT a\nend\n"), input_error);
  CHECK_THROWS_AS(read_circuit("circuit c\ninputs a\noutputs y\ngate y = NOT a\n"), input_error);
  CHECK_THROWS_AS(read_circuit("circuit c\ninputs a\noutputs y\ngate y = NOT a\nend\nend\n"), input_error);
  try {
    read_circuit("circuit c\ninputs a\n\noutputs y\ngate y = FOO a\nend\n");
    FAIL("no error");
  } catch (const input_error& e) {
    CHECK(std::string(e.what()).find("line 5") != std::string::npos);
  }
}

TEST_CASE("qbf and model files") {
  Qbf q = hard_family(2);
  CHECK(write_qbf(read_qbf(write_qbf(q))) == write_qbf(q));
  Qbf back = read_qbf(write_qbf(q));
  CHECK(back.prefix == q.prefix);
  CHECK(back.matrix == q.matrix);
  CHECK_THROWS_AS(read_qbf("qbf\nforall x\nmatrix x & y\nend\n"), input_error);
  CHECK_THROWS_AS(read_qbf("qbf\nforall\nmatrix true\nend\n"), input_error);

  DirectionalModel m = hard_family_witness(2);
  DirectionalModel m2 = read_model(write_model(m));
  REQUIRE(m2.circuits.size() == m.circuits.size());
  for (std::size_t i = 0; i < m.circuits.size(); ++i) CHECK(m2.circuits[i] == m.circuits[i]);
  CHECK(check_model(q, m2));
}

TEST_CASE("sequence, instance and plan files") {
  PlanSeqRepr s = gen_sat_stateaction(Cnf3Encoding{2, 1});
  PlanSeqRepr s2 = read_seq(write_seq(s));
  CHECK(write_seq(s2) == write_seq(s));
  CHECK(expand(s2).states == expand(s).states);
  CHECK_THROWS_AS(read_seq("seq QQ\nvars a\ninit 0\nlen 1\nactions\nend\n"), input_error);
  CHECK_THROWS_AS(read_seq("seq SS\nvars a\ninit 0\nlen 1\nactions\nend\n"), input_error);

  PolyplanInstance inst = gen_long_plan_instance(6);
  PolyplanInstance inst2 = read_polyplan(write_polyplan(inst));
  CHECK(write_polyplan(inst2) == write_polyplan(inst));
  auto plan = search_plan(inst2);
  REQUIRE(plan);
  CHECK(read_plan(write_plan(*plan, inst2.actions), inst2.actions) == *plan);
  CHECK(simulate(inst2, *plan).valid);
  CHECK_THROWS_AS(read_plan("plan\nnope\nend\n", inst2.actions), input_error);

  PolyplanInstance withgoal = inst;
  withgoal.goal_circuit = read_circuit("circuit g\ninputs c1 c2 c3\noutputs y\ngate y = AND c1 c2 c3\nend\n");
  CHECK(write_polyplan(read_polyplan(write_polyplan(withgoal))) == write_polyplan(withgoal));
}

TEST_CASE("lasso files") {
  LassoModel m{{"a", "b"}, {{true, false}}, {{false, false}, {true, true}}};
  CHECK(read_lasso(write_lasso(m)) == m);
  LassoModel empty{{}, {}, {{}}};
  CHECK(write_lasso(empty) == "lasso\nvars\ninitpart\nperiod\n-\nend\n");
  CHECK(read_lasso(write_lasso(empty)) == empty);
  CHECK_THROWS_AS(read_lasso("lasso\nvars a\ninitpart\nperiod\nend\n"), input_error);
  CHECK_THROWS_AS(read_lasso("lasso\nvars a\ninitpart\n01\nperiod\n1\nend\n"), input_error);

  PlanSeqRepr s;
  s.kind = SeqKind::SS;
  s.vars = {"p", "q"};
  s.s0 = {false, true};
  s.N = 1;
  CircuitBuilder b("next");
  auto in = b.inputs(s.vars);
  b.outputs({"p_next", "q_next"}, b.increment(in));
  s.circuit = b.build();
  UniqueModelEmbedding e = embed_unique_model(s);
  SuccinctLasso back = read_slasso(write_slasso(e.lasso));
  CHECK(write_slasso(back) == write_slasso(e.lasso));
  CHECK(expand(back) == expand(e.lasso));
  CHECK(detect_format(write_slasso(back)) == "slasso");
  CHECK(detect_format("# nothing\n") == "");
}
