#include "seifert/applications/trefoil.hpp"

namespace seifert {

SurgerySlope::SurgerySlope(Integer p, Integer q) : p_(std::move(p)), q_(std::move(q)) {
  if (q_.sign() <= 0) throw InvalidSlope("slope: q must be > 0, got " + q_.str());
  if (gcd(p_, q_) != Integer(1)) {
    throw InvalidSlope("slope: gcd(" + p_.str() + ", " + q_.str() + ") != 1");
  }
  if (p_ == Integer(6) * q_) {
    throw InvalidSlope("slope: " + p_.str() + "/" + q_.str() +
                       " is the fibre slope 6");
  }
}

SeifertInvariants trefoil_surgery(const SurgerySlope& slope) {
  Integer a = slope.q();
  Integer order = slope.p() - Integer(6) * slope.q();
  if (order.sign() < 0) {
    a = -a;
    order = -order;
  }
  std::vector<ConePair> cones{{Integer(1), Integer(2)},
                              {Integer(2), Integer(3)},
                              {std::move(a), std::move(order)}};
  return normalize(SeifertInvariants(0, Integer(-1), std::move(cones)));
}

bool trefoil_ctf(const SurgerySlope& slope) {
  return admits_horizontal_foliation(trefoil_surgery(slope)).answer ==
         FoliationAnswer::Yes;
}

bool trefoil_zero_euler_ctf(const SurgerySlope& slope) {
  const SeifertInvariants m = trefoil_surgery(slope);
  return admits_horizontal_foliation(m).answer == FoliationAnswer::Yes &&
         euler_class_vanishes(m).vanishes;
}

bool predicted_ctf(const SurgerySlope& slope) { return slope.p() < slope.q(); }

bool predicted_zero_euler_ctf(const SurgerySlope& slope) {
  return predicted_ctf(slope) && divides(abs(slope.p()), slope.q() - Integer(1));
}

}  // namespace seifert
