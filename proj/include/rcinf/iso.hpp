#pragma once

#include <stdexcept>
#include <string>

#include "rcinf/rigged.hpp"
#include "rcinf/tableau.hpp"

namespace rcinf {

/// The configuration handed to an rc -> tableau map is not reachable from the highest weight element.
class NotMember : public std::invalid_argument {
public:
    NotMember(MembershipStage stage, const std::string& detail)
        : std::invalid_argument(std::string("not in the crystal (") + to_string(stage) + "): " + detail), stage_(stage) {}

    MembershipStage stage() const { return stage_; }

private:
    MembershipStage stage_;
};

/// Throws NotMember when rc fails the forward (resp. reverse) membership test.
ForwardExponents forward_exponents_of(const RiggedConfiguration& rc);
ReverseExponents reverse_exponents_of(const RiggedConfiguration& rc);

RiggedConfiguration mlt_to_rc(const MarginallyLargeTableau& t);
MarginallyLargeTableau rc_to_mlt(const RiggedConfiguration& rc);

RiggedConfiguration mlrt_to_rc(const MarginallyLargeReverseTableau& t);
MarginallyLargeReverseTableau rc_to_mlrt(const RiggedConfiguration& rc);

MarginallyLargeReverseTableau mlt_to_mlrt(const MarginallyLargeTableau& t);
MarginallyLargeTableau mlrt_to_mlt(const MarginallyLargeReverseTableau& t);

} // namespace rcinf
