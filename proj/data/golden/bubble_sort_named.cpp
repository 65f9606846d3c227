    template<typename It, typename Pred=std::less<typename std::iterator_traits<It>::value_type>>
    inline void bubble_sort(It begin, It end, Pred pred=Pred()){
        if ( std::distance( begin, end ) <= 1 ){ return; }
        auto it_end     = end;
        bool finished   = false;
        while ( !finished ){
            finished = true;
            std::advance( it_end, -1 );
            for (auto it = begin; it! = it_end; ++ it ){
                auto next = detail::advance( it, 1 );
                if (pred( * next, * it)){
                    std::swap( * it, * next);
                    finished = false;
                }
            }
        }   
    }
