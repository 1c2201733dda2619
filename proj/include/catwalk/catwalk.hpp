#ifndef CATWALK_CATWALK_HPP
#define CATWALK_CATWALK_HPP

#include <catwalk/catalan_bijection.hpp>
#include <catwalk/error.hpp>
#include <catwalk/motzkin_bridge.hpp>
#include <catwalk/perms.hpp>
#include <catwalk/series.hpp>
#include <catwalk/trees.hpp>
#include <catwalk/verify.hpp>
#include <catwalk/walks.hpp>

#endif
