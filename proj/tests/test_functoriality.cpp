#include "cog/fixtures.hpp"
#include "cog/functoriality.hpp"
#include "doctest.h"

using namespace cog;

namespace {

FiniteCover cover_of(const ActionQuotient& aq, int basepoint = 0) {
  return finite_cover(aq.cog, canonical_tree(aq.cog->scwol(), basepoint));
}

ActionQuotient trivial_quotient(const ActionPtr& act) {
  return induce(std::make_shared<const ScwolAction>(act->restrict_to(PermGroup::trivial(act->group().degree()))));
}

}  // namespace

TEST_CASE("kappa loops evaluate back to the generators") {
  for (const auto& act : {fixtures::flip(), fixtures::tripod_s3()}) {
    auto aq = induce(act);
    FiniteCover f = cover_of(aq);
    const auto& p = f.pi1.presentation();
    for (std::size_t i = 0; i < p.label.size(); ++i) {
      FgWord w = kappa(*aq.cog, f.pi1.tree(), p.label[i]);
      FgLetter x = p.label[i];
      CHECK(f.pi1.evaluate(w) == f.pi1.evaluate({x}));
    }
    for (int s = 0; s < aq.cog->scwol().num_vertices(); ++s)
      CHECK(f.pi1.evaluate(f.pi1.tree().path[static_cast<std::size_t>(s)]).is_identity());
  }
}

TEST_CASE("action isomorphisms") {
  {
    auto act = fixtures::automorphism_action(fixtures::triangle());
    auto aq = trivial_quotient(act);
    ActionIso a = lambda_t(aq, cover_of(aq));
    CHECK_MESSAGE(a.report.ok(), a.report.summary());
    CHECK(a.lambda.source().order() == 1);
    CHECK(a.tilde_l.source()->num_vertices() == 7);
  }
  {
    auto aq = induce(fixtures::flip());
    ActionIso a = lambda_t(aq, cover_of(aq));
    CHECK_MESSAGE(a.report.ok(), a.report.summary());
    CHECK(a.lambda.source().order() == 2);
    CHECK(a.tilde_l.source()->num_vertices() == 5);
  }
  {
    auto aq = induce(fixtures::tripod_s3());
    ActionIso a = lambda_t(aq, cover_of(aq));
    CHECK_MESSAGE(a.report.ok(), a.report.summary());
    CHECK(a.lambda.image().order() == 6);
  }
  auto cyc = fixtures::automorphism_action(fixtures::hexagon());
  auto aq = trivial_quotient(cyc);
  CHECK_THROWS_AS(lambda_t(aq, finite_cover(fixtures::trivial_complex(fixtures::triangle()), canonical_tree(*fixtures::triangle()))),
                  PreconditionFailed);
}

TEST_CASE("identity morphisms induce identities") {
  for (const auto& act : {fixtures::flip(), fixtures::tripod_s3()}) {
    auto aq = induce(act);
    FiniteCover f = cover_of(aq);
    InducedPair p = induced_maps(identity_morphism(aq.cog), f, f);
    CHECK_MESSAGE(p.report.ok(), p.report.summary());
    for (const auto& u : p.u) CHECK(u.is_identity());
    CHECK(p.lambda == GroupHom::identity(f.pi1.group()));
    CHECK(p.l == ScwolMorphism::identity(f.dev.scwol));
    IsomorphismCriteria ic = isomorphism_criteria(identity_morphism(aq.cog), f, f);
    CHECK(ic.direct);
    CHECK(ic.agree());
  }
}

TEST_CASE("theta against the action isomorphism") {
  for (const auto& act : {fixtures::flip(), fixtures::tripod_s3()}) {
    auto aq = induce(act);
    ThetaCheck t = theta_check(cover_of(aq));
    CHECK_MESSAGE(t.report.ok(), t.report.summary());
  }
  auto triv = fixtures::trivial_complex(fixtures::triangle());
  ThetaCheck t = theta_check(finite_cover(triv, canonical_tree(triv->scwol())));
  CHECK_MESSAGE(t.report.ok(), t.report.summary());
}

TEST_CASE("covering of the flip quotient by the trivial quotient") {
  auto act = fixtures::flip();
  auto src = trivial_quotient(act);
  auto tgt0 = induce(act);
  int s0 = 0;
  int lift0 = src.choices.vertex_lift[0];
  std::vector<int> lifts = tgt0.choices.vertex_lift;
  lifts[static_cast<std::size_t>(tgt0.quotient.projection.vertex(lift0))] = lift0;
  auto tgt = induce(act, choices_for_lifts(*act, tgt0.quotient, lifts));
  ScwolMorphism id = ScwolMorphism::identity(act->base());
  GroupHom incl = GroupHom::inclusion(src.action->group(), act->group());
  auto k = default_transfer(src, tgt, id);
  CHECK(k[static_cast<std::size_t>(s0)].is_identity());
  CogMorphism m = induced_morphism(src, tgt, id, incl, k);
  CHECK(validate_cog_morphism(m).ok());
  auto cov = is_covering(m);
  CHECK(cov.covering);
  CHECK(cov.sheets == 2u);
  FiniteCover f = cover_of(src);
  FiniteCover fp = cover_of(tgt, m.over.vertex(s0));
  InducedPair p = induced_maps(m, f, fp);
  CHECK_MESSAGE(p.report.ok(), p.report.summary());
  CHECK(p.lambda.injective());
  CHECK(check_morphism(p.l).covering);
  CHECK(p.l.is_isomorphism());
  IsomorphismCriteria ic = isomorphism_criteria(m, f, fp);
  CHECK_FALSE(ic.direct);
  CHECK(ic.agree());
  Report r = main_lemma_check(src, tgt, id, incl, k, f.pi1.tree(), fp.pi1.tree());
  CHECK_MESSAGE(r.ok(), r.summary());
  auto bad = k;
  bad[static_cast<std::size_t>(s0)] = act->group().generators().front();
  Report rb = main_lemma_check(src, tgt, id, incl, bad, f.pi1.tree(), fp.pi1.tree());
  CHECK_FALSE(rb.ok());
  CHECK(rb.findings.front().kind == "hypothesis");

  Reconstruction rec = reconstruct_morphism(p.l, p.lambda, f, fp);
  CHECK_MESSAGE(rec.report.ok(), rec.report.summary());
  CHECK(is_covering(rec.morphism).covering);
  const Perm& g = fp.pi1.group().generators().front();
  Perm c = fp.dev.action->cells(g);
  int nv = fp.dev.scwol->num_vertices();
  std::vector<int> vm, em;
  for (int v = 0; v < nv; ++v) vm.push_back(c[static_cast<std::size_t>(v)]);
  for (int e = 0; e < fp.dev.scwol->num_edges(); ++e) em.push_back(c[static_cast<std::size_t>(nv + e)] - nv);
  ScwolMorphism moved = p.l.then(ScwolMorphism(fp.dev.scwol, fp.dev.scwol, vm, em));
  CHECK_THROWS_AS(reconstruct_morphism(moved, p.lambda, f, fp), BasepointConditionFailed);
}
