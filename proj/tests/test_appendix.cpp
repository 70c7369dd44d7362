#include <doctest.h>

#include "fano/appendix.hpp"

using namespace fano;

TEST_CASE("appendix oracle reproduces the matrix up to the known misprints") {
    const auto o = appendix_oracle();
    CHECK(o.forms_vs_corrected.empty());
    CHECK(o.matrix_vs_corrected.empty());
    CHECK(o.permuted_vs_corrected.empty());
    CHECK(o.forms_vs_printed == std::vector<std::string>{"C"});
    CHECK(o.matrix_vs_printed == std::vector<Cell>{{5, 3}, {5, 4}});
    CHECK(o.permuted_vs_printed == std::vector<Cell>{{3, 5}, {3, 6}, {6, 5}});
    CHECK(o.generic_rank == 8);
    CHECK(o.numeric_agreement);
    CHECK(o.ok());
}

TEST_CASE("appendix: a perturbed coefficient is detected") {
    const auto o = appendix_oracle();
    for (std::size_t j = 0; j < 8; ++j) {
        auto forms = appendix_forms(o.vars, Transcription::corrected);
        forms[j] += sym::Poly::var(o.vars, "h45") * sym::Poly::var(o.vars, "psi1");
        CHECK(compare_forms(o.forms, forms) == std::vector<std::string>{kFormNames[j]});
    }
    auto sy = appendix_symbols(o.vars);
    sy.g = sy.g + sy.d;
    auto M = appendix_matrix(sy);
    CHECK_FALSE(M == forms_matrix(o.vars, o.forms));
}

TEST_CASE("appendix: zero parameters give the zero matrix") {
    AppendixParams<long long> z{};
    auto M = appendix_matrix(z);
    for (auto x : M.a) CHECK(x == 0);
}

TEST_CASE("appendix: the permuted layout is the same matrix rearranged") {
    Rng rng(5, "permuted");
    AppendixParams<long long> p{};
    for (long long* f : {&p.h14, &p.h15, &p.h24, &p.h25, &p.h34, &p.h35, &p.h45, &p.a15, &p.a24, &p.a25, &p.a34,
                         &p.a35, &p.b15, &p.b24, &p.b25, &p.b34, &p.b35, &p.c15, &p.c24, &p.c25, &p.c34, &p.c35, &p.d,
                         &p.e, &p.f, &p.g})
        *f = rng.range(-9, 9);
    CHECK(permute_appendix(appendix_matrix(p)) == appendix_permuted(p));
}

TEST_CASE("appendix: rank drops become rarer as p grows") {
    auto s3 = appendix_rank_stats(3, 40000, 1), s5 = appendix_rank_stats(5, 40000, 1),
         s7 = appendix_rank_stats(7, 40000, 1);
    CHECK(s3.frequency() > s5.frequency());
    CHECK(s5.frequency() > s7.frequency());
    CHECK(s5.frequency() <= 10.0 / 125);
    CHECK(s3.frequency() < 1);
    CHECK_THROWS(appendix_rank_stats(9, 10, 1));
}
