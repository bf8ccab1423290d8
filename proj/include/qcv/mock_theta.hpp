#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qcv/qfactory.hpp"
#include "qcv/report.hpp"

namespace qcv {

// Sixth- and third-order mock theta functions, expanded as exact integer
// series.  Each is a sum of Pochhammer-ratio terms; terms are generated
// incrementally (the ratio of consecutive terms is a product of a few
// binomials, so each step costs O(N)).

enum class MockThetaId { Upsilon, Upsilon3, Psi6, PsiMinus6, Rho6, Lambda6 };

inline constexpr MockThetaId kAllMockThetas[] = {
    MockThetaId::Upsilon,   MockThetaId::Upsilon3, MockThetaId::Psi6,
    MockThetaId::PsiMinus6, MockThetaId::Rho6,     MockThetaId::Lambda6,
};

std::string mock_theta_name(MockThetaId id);
std::optional<MockThetaId> parse_mock_theta(const std::string& name);

// index of the first summand (PsiMinus6 starts at n = 1, the rest at n = 0)
unsigned long long mock_first_term(MockThetaId id);

// q-valuation of the n-th summand
unsigned long long mock_term_valuation(MockThetaId id, unsigned long long n);

// n-th summand built literally from pochhammer_n / invert (slow reference
// path used by tests to pin the fast incremental construction)
Series<ExactRing> mock_term(MockThetaId id, unsigned long long n, std::size_t N);

// full expansion to order N (memoized)
SeriesPtr<ExactRing> mock(MockThetaId id, std::size_t N);

// The three identities tying mock theta pairs to partition generating
// functions:
//   upsilon(q) + upsilon3(q)   = 2 sum b(n) q^n
//   Psi6(q)    + 2 PsiMinus6(q) = 3 sum c(n) q^n
//   2 rho6(q)  + lambda6(q)    = 3 sum d(n) q^n
enum class ChoiKimId { ThirdOrder, SixthPsi, SixthRho };

CheckReport verify_choi_kim(ChoiKimId which, std::size_t N);
std::vector<CheckReport> verify_choi_kim_all(std::size_t N);

}  // namespace qcv
