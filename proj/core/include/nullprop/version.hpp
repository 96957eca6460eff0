#ifndef NULLPROP_VERSION_HPP
#define NULLPROP_VERSION_HPP

#include <string_view>

#ifndef NULLPROP_VERSION
#define NULLPROP_VERSION "0.0.0"
#endif

namespace nullprop
{

inline constexpr std::string_view version = NULLPROP_VERSION;

} // namespace nullprop

#endif // NULLPROP_VERSION_HPP
