#pragma once

// SVG pictures of trapezoid chains. Floating coordinates, display only.

#include <cstddef>
#include <string>

namespace swalk {

// The first `count` order-0 trapezoids of the lambda chain. With `recursive`
// the enclosing trapezoids of every order n with 7^n <= count are outlined
// on top.
std::string draw_trapezoids_svg(std::size_t count, bool recursive);

}  // namespace swalk
