#pragma once

#include "mindbody/error.hpp"
#include "mindbody/perm.hpp"
#include "mindbody/egraph.hpp"
#include "mindbody/braid.hpp"
#include "mindbody/mind_body.hpp"
#include "mindbody/medial.hpp"
#include "mindbody/surface.hpp"
#include "mindbody/trees.hpp"
#include "mindbody/io.hpp"
#include "mindbody/verify.hpp"
