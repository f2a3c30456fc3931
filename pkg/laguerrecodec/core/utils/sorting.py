# -*- coding: utf-8 -*-

def graded_lex_key(exponents):
    """ Sort key putting higher total degree first, then larger exponents
    of earlier variables first. """
    return -sum(exponents), tuple(-e for e in exponents)


def sort_profiles(profiles):
    """ Canonical form of a multiset of profiles, so that two multisets
    compare by equality. """
    return sorted(tuple(profile) for profile in profiles)
