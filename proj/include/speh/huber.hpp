#pragma once

#include "speh/ordered_group.hpp"
#include "speh/place.hpp"

namespace speh {

/// The value group of a place as a lex group together with |2| in it.
/// Archimedean places carry a "log" coordinate for the real part.
struct GroupPresentation {
  GroupDescriptor group;
  GroupElement two;
};

GroupPresentation huber_presentation(const Place& place);

/// x -> x / Delta_x. Places with trivial Delta are returned unchanged.
Place huber_retract(const Place& place);

}  // namespace speh
