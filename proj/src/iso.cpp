#include "rcinf/iso.hpp"

namespace rcinf {

ForwardExponents forward_exponents_of(const RiggedConfiguration& rc)
{
    auto m = is_member_rcinf(rc);
    if (!m.member()) throw NotMember(m.stage, m.detail);
    return *m.exponents;
}

ReverseExponents reverse_exponents_of(const RiggedConfiguration& rc)
{
    auto m = is_member_rcinf_reverse(rc);
    if (!m.member()) throw NotMember(m.stage, m.detail);
    return *m.exponents;
}

RiggedConfiguration mlt_to_rc(const MarginallyLargeTableau& t) { return rc_from_forward(forward_from_mlt(t)); }

MarginallyLargeTableau rc_to_mlt(const RiggedConfiguration& rc) { return mlt_from_forward(forward_exponents_of(rc)); }

RiggedConfiguration mlrt_to_rc(const MarginallyLargeReverseTableau& t) { return rc_from_reverse(reverse_from_mlrt(t)); }

MarginallyLargeReverseTableau rc_to_mlrt(const RiggedConfiguration& rc)
{
    return mlrt_from_reverse(reverse_exponents_of(rc));
}

MarginallyLargeReverseTableau mlt_to_mlrt(const MarginallyLargeTableau& t) { return rc_to_mlrt(mlt_to_rc(t)); }

MarginallyLargeTableau mlrt_to_mlt(const MarginallyLargeReverseTableau& t) { return rc_to_mlt(mlrt_to_rc(t)); }

} // namespace rcinf
