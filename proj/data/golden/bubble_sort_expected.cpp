    template<typename It, typename Pred=std::less<typename std::iterator_traits<It>::value_type>>
    inline void fun1(It var1, It var2, Pred fun2=Pred()){
        if ( std::distance( var1, var2 ) <= 1 ){ return; }
        auto var3     = var2;
        bool var4   = false;
        while ( !var4 ){
            var4 = true;
            std::advance( var3, -1 );
            for (auto var5 = var1; var5! = var3; ++ var5 ){
                auto var6 = detail::advance( var5, 1 );
                if (fun2( * var6, * var5)){
                    std::swap( * var5, * var6);
                    var4 = false;
                }
            }
        }   
    }
